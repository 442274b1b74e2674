"""Pairs of pants, their orthogeodesics, and a glued genus-2 surface."""
from arcmetric import hyptrig, pantsnet

l1, l2, l3 = 1.0, 1.5, 2.0
rep = pantsnet.build_pants_rep(l1, l2, l3)
axes = pantsnet.cuff_axes(rep)
print("cuff axes:", [tuple(round(float(z), 6) if z is not hyptrig.INF else "inf" for z in a.endpoints)
                     for a in axes])
print("arc between cuffs 2 and 3, closed formula :", hyptrig.pants_arc_two_cuffs(l1, l2, l3))
print("                          from the matrices:", hyptrig.geodesic_distance(axes[1], axes[2]))

decomp = pantsnet.genus_two()
point = pantsnet.FNPoint([1.0, 1.4, 0.8], [0.2, 0.5, -0.4])
g2 = pantsnet.build_glued_rep(decomp, point)
print("\ngenus two generators:", sorted(g2.generators))
for w in ("c0.0", "c0.1", "c0.2", "t1", "c0.0 t1", "t1 t2^-1"):
    print(f"  {w:<10} length {pantsnet.word_length(g2, w):.9f}")
