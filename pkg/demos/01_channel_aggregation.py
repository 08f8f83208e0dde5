"""Splitting one erasure-coded packet across several lossy channels.

Three channels each barely reach the 0.995 success target on their own:
3 qudits at p=0.98, 5 at p=0.972, 7 at p=0.96.  Aggregating them lets a
5-qudit packet ride 2+2+1 across all three, meeting the target while
consuming less of every channel.
"""

from qnetagg import (
    AllocationProblem,
    Channel,
    ChannelSpec,
    QrsCode,
    allocate,
    ps_single,
    single_channel_solutions,
    success_probability,
    uniform_configuration,
)

TARGET = 0.995

print("Single-channel baselines (q = 1, one photon per qubit):")
for d, k, p in [(3, 2, 0.98), (5, 3, 0.972), (7, 4, 0.96)]:
    value = ps_single(QrsCode(d, k), 1, p)
    print(f"  {d} qudits at p={p}: P_S = {value:.5f}  (margin {value - TARGET:+.5f})")

print("\nAggregated 5-qudit packet, split 2 + 2 + 1 across the channels:")
config = uniform_configuration(
    QrsCode(5, 3),
    1,
    [(Channel("blue", 0.98), 2), (Channel("red", 0.972), 2), (Channel("black", 0.96), 1)],
)
value = success_probability(config)
print(f"  P_S = {value:.5f} >= {TARGET}: uses only part of each channel")

print("\nAllocation search when blue and red are mostly consumed (capacity 2 each):")
problem = AllocationProblem(
    channels=(
        ChannelSpec("blue", 0.98, 2),
        ChannelSpec("red", 0.972, 2),
        ChannelSpec("black", 0.96, 7),
    ),
    codes=(QrsCode(3, 2), QrsCode(5, 3), QrsCode(7, 4)),
    q=1,
)
result = allocate(problem)
split = {ch.id: n for ch, n in zip(problem.channels, result.split) if n}
print(f"  minimal feasible: d={result.code.d} split {split}  P_S = {result.achieved:.5f}")
print(f"  single-channel fallbacks: "
      f"{[(c.d, ch) for c, ch in single_channel_solutions(problem)]}")
