"""Quivers, Dynkin classification, and the duplicated quiver.

The duplicated algebra of a path algebra kQ glues two copies of kQ along
the dual bimodule.  Its quiver consists of Q, a primed copy Q', and one
connecting arrow x' -> y per maximal path y ~> x of Q.
"""

from dupcat import classify_dynkin, duplicated_quiver, opposite, parse_quiver
from dupcat.fixtures import a_n, d4_subspace, kronecker

print("== parsing the text format ==")
q = parse_quiver("""
vertices 1 2
arrow a 2 1
""")
print(f"A2 quiver: vertices {q.vertices}, arrows {[a.name for a in q.arrows]}")
print("Dynkin type:", classify_dynkin(q))
print("opposite has arrows:", [(a.source, a.target) for a in opposite(q).arrows])

print("\n== the D4 example: three arrows into a central sink ==")
d4 = d4_subspace()
print("Dynkin type:", classify_dynkin(d4))
report = duplicated_quiver(d4)
print(report.as_text())
print("The three length-two composites through the junction are identified")
print("with each other, and the six mismatched ones vanish: these are the")
print("defining relations of the duplicated algebra in this example.")

print("== the Kronecker quiver is not Dynkin ==")
print("classify:", classify_dynkin(kronecker()))

print("\n== connecting arrows always match the maximal paths ==")
for name, quiver in [("A1", a_n(1)), ("A3 linear", a_n(3)), ("A3 zigzag", a_n(3, "zigzag"))]:
    rep = duplicated_quiver(quiver)
    print(f"{name}: {rep.connecting_pairs()}")
