"""Generate a synthetic event-based PLC dataset and look inside.

The generator runs a deterministic state machine through production cycles
and emits a row only when a signal changes, exactly like event-based PLC
logging. Ground truth (cycle boundaries, special feature indices) comes
along for free, which is what makes the rest of the toolkit testable.
"""

from pathlib import Path

from plcprep import SynthConfig, generate, write_event_csv

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

config = SynthConfig(duration_s=1800.0, seed=42)  # 30 minutes, 90 s cycles
events, truth = generate(config)

print(f"dataset: {events.n_rows} event rows x {events.n_features} features")
print(f"cycles: {len(truth.cycle_starts_ms)} "
      f"({len(truth.noisy_cycles)} with injected noise)")
print(f"anchor signal:    {truth.feature_names[truth.anchor_index]}"
      " (pulses high at every cycle start)")
print(f"constant signal:  {truth.feature_names[truth.constant_index]}"
      " (variance-prune target)")
a, b = truth.duplicate_pair
print(f"duplicate pair:   {truth.feature_names[b]} copies {truth.feature_names[a]}"
      " (correlation-prune target)")
if truth.twin_index is not None:
    print(f"anchor twin:      {truth.feature_names[truth.twin_index]}"
          " (same pulse, shifted mid-cycle)")

print("\nfirst five event rows:")
for i in range(5):
    values = [int(c.values[i]) for c in events.columns[:6]]
    print(f"  t={events.timestamps[i]:>7} ms  {values} ...")

path = out_dir / "synthetic.csv"
write_event_csv(events, path)
print(f"\nwrote {path}")
