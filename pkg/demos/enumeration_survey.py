"""Survey an envelope of vectors: value buckets, collisions, and the
virtual vectors whose conductance turns out real anyway.

Run: python3 demos/enumeration_survey.py
"""

from collections import Counter

from vtangle import Envelope, enumerate_classify

env = Envelope(3, 2)
records, summary = enumerate_classify(env)

print(f"envelope n <= {env.n_max}, |a| <= {env.a_max}")
print(f"vectors:            {summary['vectors']}")
print(f"distinct values:    {summary['buckets']}")
print(f"collision buckets:  {len(summary['collisions'])}")
print(f"formula degenerate: {len(summary['formula_degenerate'])} (recovered by state sum)")
print(f"open findings:      {len(summary['findings'])}")
print()

# the most crowded conductance values
sizes = Counter()
for coll in summary["collisions"]:
    sizes[coll["conductance"]] = len(coll["vectors"])
print("most shared values:")
for value, size in sizes.most_common(5):
    print(f"  {value:>18}  shared by {size} vectors")
print()

# virtual vectors with real conductance, and why each one is unsurprising
print(f"real-valued virtual vectors: {len(summary['real_virtual'])}")
for entry in summary["real_virtual"][:8]:
    print(f"  ({entry['vector']}) = {entry['conductance']}")
    print(f"      {entry['explanation']}")
print("  ...")
print()

# the same records stream through the CLI as CSV:
#   vtangle enumerate --envelope 3,2 --format csv --out survey.csv
real = sum(1 for r in records if r.is_real)
print(f"{real} of {len(records)} conductances are real (infinity included)")
