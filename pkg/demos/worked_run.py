"""The complete worked degeneration for a = (7,4,1), b = 2, printed as a
stage-by-stage audit table."""

from pierikit import golden_run_741

report = golden_run_741()
print(report.table())
print()
print("final cycle indices:", ", ".join(str(g) for g in report.final_indices))
