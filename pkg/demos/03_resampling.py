"""Upscale event-based rows onto the uniform grid the spectral stage needs.

Event-based logs hold the last written value between rows, so the
reconstruction is sample-and-hold: every grid point repeats the latest
event at or before it. The step should be the PLC cycle time of the
logging controller.
"""

import numpy as np

from plcprep import (
    EventSeries,
    FeatureColumn,
    resample_forward_fill,
    sampling_frequency,
)

# a hand-sized event log: four rows, two signals
events = EventSeries(
    np.array([190000, 190500, 191000, 192000]),
    (
        FeatureColumn("Actuator", [0, 0, 0, 1]),
        FeatureColumn("Sensor 1", [0, 1, 1, 1]),
    ),
)

step_ms = 500
print(f"step {step_ms} ms -> sampling frequency {sampling_frequency(step_ms)} Hz")

uniform = resample_forward_fill(events, step_ms)
print(f"\n{events.n_rows} events -> {uniform.n_rows} uniform rows")
print(f"{'t (ms)':>8}  {'Actuator':>8}  {'Sensor 1':>8}")
event_times = set(events.timestamps.tolist())
for i, t in enumerate(uniform.timestamps.tolist()):
    marker = "  <- event row" if t in event_times else "  <- held"
    a = int(uniform.column("Actuator").values[i])
    s = int(uniform.column("Sensor 1").values[i])
    print(f"{t:>8}  {a:>8}  {s:>8}{marker}")

print("\nthe 191500 ms row repeats the 191000 ms event: no new information")
print("is invented, the grid just makes the timing explicit.")
