"""How a reward gradient reaches the denoiser weights through DDIM sampling.

A 40-parameter pixel-wise denoiser stands in for the real network so every
number below prints in a fraction of a second.  We sample with the training
gradient policy, look at which steps keep a graph, and watch the early-stop
step and the training steps decide whether any gradient exists at all.

    python demos/01_gradients_through_the_sampler.py
"""
import numpy as np

from drpose.autodiff import backward, ops, parameter, precision
from drpose.diffusion import DenoiserArch, GradPolicy, MicroDenoiser, ddim_sample, make_schedule

arch = DenoiserArch(image_channels=1, views=2, widths=(1,), temb_dim=4, size=4, T_full=20)
schedule = make_schedule(20)
rng = np.random.default_rng(0)

with precision(np.float64):
    net = MicroDenoiser(arch, seed=1)
    print(f"micro denoiser: {net.num_params()} parameters")
    cond = rng.normal(size=(1, 4, 4, 1))
    x_T = parameter(rng.normal(size=(1, 2, 4, 4, 1)))
    target = rng.normal(size=x_T.shape)

    # Training steps {2, 6}, stop at step 1: both training steps are reached.
    res = ddim_sample(net, net, cond, x_T, schedule, 8, GradPolicy.train({2, 6}, 1))
    loss = ops.squared_error(res.x0, target)
    g = backward(loss, wrt=[x_T] + net.parameters())
    print(f"steps executed: {res.updates + 1}, KL terms: {len(res.kl_terms)}")
    print(f"|dL/dx_T| = {np.abs(g[x_T]).max():.1f}   (x_T is noise, never a leaf of the graph)")
    print(f"|dL/dw|   = {sum(np.abs(g[p]).sum() for p in net.parameters()):.4f}")

    # Stop at step 3: step 2 never runs, only step 6 contributes.
    res = ddim_sample(net, net, cond, x_T, schedule, 8, GradPolicy.train({2, 6}, 3))
    print(f"\nearly stop at 3: KL terms {len(res.kl_terms)} (only step 6 is at or above t_min)")

    # Stop at step 7: no training step is reached and the weights get nothing.
    res = ddim_sample(net, net, cond, x_T, schedule, 8, GradPolicy.train({2, 6}, 7))
    g = backward(ops.squared_error(res.x0, target), wrt=net.parameters())
    total = sum(np.abs(v).sum() for v in g.values())
    print(f"early stop at 7: KL terms {len(res.kl_terms)}, total |dL/dw| = {total}")

    # The KL term against an identical reference is exactly zero.
    res = ddim_sample(net, net, cond, x_T, schedule, 8, GradPolicy.train({2, 6}, 1))
    print(f"\nKL against an identical reference: {[float(k.data) for k in res.kl_terms]}")
