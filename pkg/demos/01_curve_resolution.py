"""Resolving a toric curve by repeated Nash modification."""
from toricnash import make, minimal_generators, nash_step, resolve, trace_invariants


# --- One step ---
A = make([12, 28, 33])
print(A, "->", nash_step(A))

# --- Whole trace ---
trace = resolve(A)
for k, step in enumerate(trace.steps):
    print(f"A^{k} = {step}   minimal generators {minimal_generators(step)}")
print("steps until 1 appears:", trace.eta)

# multiplicity and embedding dimension never go up along the way
report = trace_invariants(trace)
print("multiplicities:", report.multiplicities)
print("embedding dims:", report.embedding_dims)
print("both non-increasing:", report.ok)

# --- Arbitrary precision ---
big = make([10**10, 2 * 10**10 + 1])
print(big, "resolves in", resolve(big).eta, "steps, ending at", resolve(big).final)
