"""A Dehn twist moves points less and less as its curve gets pinched."""
from arcmetric import Slope, twist_pinch_experiment

levels = (1, 0.3, 0.1, 0.03, 0.01)
for power in (1, 2):
    rows = twist_pinch_experiment(Slope(1, 0), levels, 6, power)
    print(f"T^{power}: " + "  ".join(f"eps={e}: {v:.3e}" for e, v in rows))
