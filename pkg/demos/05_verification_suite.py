"""Programmatic use of the verification suite.

The same machinery behind ``ttwsusy verify``: configure parameter sets,
truncation and tolerances, run the suites, and inspect the report.
"""

from ttwsusy import SuiteConfig, run

config = SuiteConfig(
    param_sets=(
        {"k": 1.0, "a": 1.0, "b": 1.0, "omega": 1.0},
        {"k": 2.5, "a": 1.3, "b": 0.9, "omega": 0.8},
    ),
    truncation=(4, 3),
    quad_orders=(56, 56),
    suites=("model", "algebra"),
    seed=11,
)

report = run(config)
summary = report.summary()
print(f"{summary['passed']}/{summary['total']} checks passed\n")

print("the five largest residuals:")
for c in sorted(report.checks, key=lambda c: -c.residual)[:5]:
    print(f"  {c.name:<40} {c.residual:.3e} (tol {c.tolerance:.0e}) [{c.params}]")

print("\nfull text report available via report.to_text(), JSON via report.to_json()")
print("command line equivalent:")
print("  ttwsusy verify --suite model --suite algebra --param k=2.5,a=1.3,b=0.9,omega=0.8 --nmax 4")
