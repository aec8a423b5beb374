"""Charts, smoothness and ideals for configurations in Z^2."""
from toricnash import all_charts, is_smooth, iterate_multidim, kernel_binomials, log_jacobian, validate

# --- The surface xz - y^4 ---
config = validate([(1, 0), (1, 1), (3, 4)])
print(config, "separator", config.separator)
for rel in kernel_binomials(config, 4):
    print("relation:", rel.render())
print("log jacobian:", ", ".join(log_jacobian(config).render()))

for ch in all_charts(config):
    pivot = tuple(i + 1 for i in ch.pivot)
    print("pivot", pivot, ch, "retained" if ch.retained else "dropped")

# --- Iterating the charts until every leaf is smooth ---
tree = iterate_multidim(config, max_depth=8)
for node in tree.nodes():
    print("  " * node.depth + str(node.config), node.status)

# --- xz - y^3: one chart stays singular ---
config = validate([(1, 0), (1, 1), (2, 3)])
for ch in all_charts(config):
    if ch.retained:
        print(ch, "smooth" if is_smooth(ch.config) else "singular")

# --- Curves are configurations in Z^1 with a single useful chart ---
curve = validate([12, 28, 33])
print([str(ch) for ch in all_charts(curve) if ch.retained])
