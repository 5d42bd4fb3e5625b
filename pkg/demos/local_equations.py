"""Build both presentations of the local defining equations and reduce them.

Run with:  python3 demos/local_equations.py
"""

from rpphilb import RPP
from rpphilb.equations import (
    ambient_and_bundle,
    check_grading,
    tangent_embedding,
    type_i_ideal,
    type_ii_ideal,
)

n = RPP.from_text("0 0 3 / 0 2 5 / 3 5 5")
print(f"filling {n.to_text()!r}, weight {n.weight()}")
print()

ideal_i = type_i_ideal(n)
print("divisibility presentation (universal monic polynomials):")
print(f"  {ideal_i.n_vars} coefficient variables, {ideal_i.n_generators} generators")
print(f"  generator blocks: {ideal_i.group_sizes()}")
print(f"  independent conditions: {ideal_i.condition_count}")
print(f"  variables - conditions = {ideal_i.n_vars - ideal_i.condition_count} = weight")
print(f"  homogeneous under the coefficient grading: {check_grading(ideal_i)}")
print(f"  first generator: {ideal_i.generators[0]}")
print()

ideal_ii = type_ii_ideal(n)
print("commuting-factor presentation (row and column quotients):")
print(f"  {ideal_ii.n_vars} variables, {ideal_ii.n_generators} generators in blocks {ideal_ii.group_sizes()}")
print(f"  variables - conditions = {ideal_ii.n_vars - ideal_ii.condition_count}")
minimal = type_ii_ideal(n, minimal_border=True)
print(f"  minimal-border variant: {minimal.n_vars} variables, {minimal.n_generators} generators")
print()

summary = ambient_and_bundle(n).to_json_obj()
print(
    f"ambient product of chain spaces: dim {summary['dim_ambient']}, "
    f"bundle rank {summary['rank_bundle']}, expected dim {summary['expected_dim']}"
)
print()

for label, ideal in (("divisibility", ideal_i), ("commuting", ideal_ii)):
    dim, reduced = tangent_embedding(ideal)
    print(
        f"tangent reduction of the {label} form: embedding dimension {dim}, "
        f"surviving generator degrees {reduced.generator_degrees()}"
    )
