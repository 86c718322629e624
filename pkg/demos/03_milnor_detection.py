"""Magnus expansion, lower-central depth, and Milnor-type coefficients.

Substituting x_i -> 1 + X_i embeds a free group into truncated
noncommutative power series.  The smallest degree carrying a nonzero term
is exactly the word's lower-central class; coefficients on distinct-index
monomials survive the reduced quotient and give Milnor-type invariants.

Run:  python3 demos/03_milnor_detection.py
"""

from linkhomotopy import (
    commutator,
    eta_tower,
    gamma_class_lower_bound,
    generator,
    magnus_expand,
    milnor_invisibility_report,
    mu_coefficient,
    reduced_expand,
)

x1, x2, x3 = generator(1), generator(2), generator(3)

c = commutator(x1, x2)
print(f"expand [x1,x2] to degree 2:   {magnus_expand(c, 2)}")
print(f"expand [x1,x2]^3 to degree 2: {magnus_expand(c ** 3, 2)}")
print(f"reduced expansion of x1^2:    {reduced_expand(x1 ** 2, 3)}")

print("\nLower-central class certificates (exact for free groups):")
for label, word in [
    ("x1", x1),
    ("[x1,x2]", c),
    ("[[x1,x2],[x1,x3]]", commutator(c, commutator(x1, x3))),
    ("tower(3) word", eta_tower(3).word),
]:
    bound = gamma_class_lower_bound(word, 5)
    shown = f">= 6" if bound is None else bound
    print(f"  class({label}) = {shown}")

print("\nMilnor-type coefficients detect commutator powers at three strands:")
for k in (-2, 0, 1, 3):
    print(f"  mu([x1,x2]^{k}, (1,2)) = {mu_coefficient(c ** k, (1, 2))}")

print("\nAt four and five strands the tower classes become invisible:")
for n in (4, 5):
    print(f"-- {n} strands --")
    for line in milnor_invisibility_report(n).lines():
        print(f"  {line}")
