"""
Checking the hand-written gradients
===================================

Every backward pass in the package is written by hand, so we compare the
tape gradients of a small NTM against central differences. The
differences are taken in extended precision, which keeps their roundoff
well below the size of the gradients being checked.
"""
import numpy as np

from ntm_dyck import ntm, training
from ntm_dyck import tensor as T

rng = np.random.default_rng(1)
params = ntm.init_params(rng, memory_locations=8, memory_width=4, hidden=8)
words = ["uudd", "udud", "duud"]

errors = T.grad_check_many(lambda: training.batch_loss(params, words), params.tensors,
                           h=1e-5, oracle_dtype=np.longdouble)
for name, err in sorted(errors.items()):
    print(f"{name:22s} {err:.2e}")
print("worst:", max(errors.values()))
