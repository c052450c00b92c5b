# Evaluating a few closures, their mirrors and a disjoint union.
from spin7link.braid import BraidWord, Closure, LinkPresentation, parse_braid
from spin7link.exactalg import lp_div_exact
from spin7link.invariant import evaluate_link, evaluate_word, known_examples, match_framing
from spin7link.repdata import DELTA

fig8 = parse_braid("1 -2 1 -2", 3)
v = evaluate_word(fig8)
print("figure-eight  :", lp_div_exact(v, DELTA), "  (times Delta)")
print("amphichiral   :", v.mirror() == v)

tref = BraidWord(3, (1, 1, 1))
t = evaluate_word(tref)
print("trefoil == its mirror:", t == t.mirror())       # False: it is chiral
print("mirror by letters == W -> 1/W:",
      evaluate_link(LinkPresentation.single(tref, mirror=True)) == t.mirror())

union = LinkPresentation((Closure(fig8), Closure(tref)))
print("union multiplies:", evaluate_link(union) == v * t)

# framing: the global-writhe mode strips W^(kappa * exponent sum)
print("sigma_1, global-writhe:", evaluate_word(BraidWord(3, (1,)), "global-writhe") == DELTA**2)

# printed values vs computed ones
for ex in known_examples():
    got = evaluate_word(ex.word)
    print(f"{ex.name:<13} [{ex.word}] ->", match_framing(got, ex.expected, ex.max_k, ex.allow_mirror))
