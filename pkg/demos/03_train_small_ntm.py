"""
Training a small NTM
====================

A few hundred Adam steps on words shorter than 12, then a look at how the
model does on longer words than it was trained on. Full-size runs are in
``python -m ntm_dyck.reproduce``; this one finishes in about a minute.
"""
from ntm_dyck import evaluation, ntm, training

cfg = training.TrainConfig(max_steps=600, eval_every=100, eval_samples=200, seed=3)
params = ntm.init_params(training.init_rng(cfg.seed), memory_locations=32, memory_width=8, hidden=32)

result = training.train(params, cfg, on_record=lambda r: print(r) if "step" in r else None)
print("stopped:", result.stopped, "after", result.step, "steps")

report = evaluation.generalization_sweep(params, [6, 10, 20, 30], samples_per_n=200)
for n, a in report.by_n().items():
    print(f"D_<{2 * n:<3d} AUC {a:.3f}")
