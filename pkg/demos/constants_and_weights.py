# The stored three-strand representation, and the closure weights solved from it.
from spin7link.blockmat import BlockMatrix
from spin7link.invariant import derive_markov_weights, quantum_trace
from spin7link.braid import BraidWord
from spin7link.repdata import DELTA, build_generators, build_rep_table

g = build_generators()           # raises ValidationFailed on a bad transcription
print("R12 =")
print(g.R12)
print()
print("block traces of R12:", *g.R12.traces(), sep="\n  ")

# the clasp is a multiple of an idempotent
print("A12^2 == Delta A12 :", g.A12 * g.A12 == g.A12 * DELTA)
print("braid relation     :", g.R12 * g.R23 * g.R12 == g.R23 * g.R12 * g.R23)

table = build_rep_table()
for name in ("s", "Gamma(1,0,1)", "Gamma(0,1,1)", "Gamma(0,0,3)"):
    print(f"{name:<13} dim {table.dim(name):>3}  casimir {table.casimir(name)}")

# weights are fixed by four closures: unlink, two kinks and a double kink
mw = derive_markov_weights()
print("kink exponent kappa:", mw.kappa)
for i, w in enumerate(mw.weights):
    print(f"w{4 - i} at W=1 = {w(1)}")
print("w4 == Delta:", mw.w4 == DELTA)

# an unknot that was not used in the solve
print("closure of s1 s2^-1 == Delta:", quantum_trace(BraidWord(3, (1, -2))) == DELTA)
print("identity check:", BlockMatrix.identity() * g.R12 == g.R12)
