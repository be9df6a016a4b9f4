"""Representations at work: the Fock action, the truncated oscillator in
extended precision, and the Virasoro-type action on the module v_k."""

from heisenweyl.reps import (
    FockConfig,
    ZModuleVector,
    bmodule_descent,
    build_oscillator,
    fock_descent,
    verify_oscillator,
    virasoro_on_bmodule,
)

cfg = FockConfig(2, 2, 3)
for m in [(1, 0), (2, 1), (3, 3)]:
    print(f"descent of xi^{m}:", fock_descent(m, cfg))

for dps in (None, 50):
    res = verify_oscillator(build_oscillator(64, 1.3, 1.7, dps=dps))
    label = "float64" if dps is None else f"{dps} digits"
    print(f"oscillator N=64 ({label}): worst absolute {max(r.absolute for r in res):.2e}, "
          f"relative {max(r.relative for r in res):.2e}")

v = ZModuleVector.basis(3)
print("L_-1 v_3 =", virasoro_on_bmodule(-1, v))
print("L_1 v_3  =", virasoro_on_bmodule(1, v))
steps, coeff = bmodule_descent(v)
print(f"descent of v_3 reaches v_0 in {steps} steps with coefficient {coeff}")
