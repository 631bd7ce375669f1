"""
An NTM that is a stack by construction
======================================

``reference.stack_params`` sets every weight by hand: the read head moves
up on u and down on d, and the first write leaves markers at the bottom
of the stack. This shows the architecture can recognise long Dyck words,
whatever training happens to find.
"""
from ntm_dyck import evaluation, reference

params = reference.stack_params()

word = "uuduuddduduudd"
trace = evaluation.record_trace(params, word)
position = evaluation.unwrapped_position(trace.read_weights)
for t, (c, p, pos) in enumerate(zip(word, trace.probs, position), 1):
    print(f"{t:2d} {c}  p={p:.3f}  read head at {pos:6.2f}")

a = evaluation.stack_alignment(trace)
print("\nalignment with the height profile: r =", round(a.pearson_r, 4),
      " agreement =", a.directional_agreement)

report = evaluation.generalization_sweep(params, [6, 50, 100], samples_per_n=200)
print({f"D_<{2 * n}": round(v, 4) for n, v in report.by_n().items()})
