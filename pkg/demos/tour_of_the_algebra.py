"""A short walk through H_{p,q}: products, reordering, the normal element theta
and the central element Omega once q^r = p^s."""

from heisenweyl import HeisenbergAlgebra, OneParam, pq_number, theta
from heisenweyl.hpq import check_normal, is_central, omega

H = HeisenbergAlgebra()
x, y, z = H.x, H.y, H.z

print("y x      =", y * x)
print("y x^3    =", y * x**3)
print("[3]_{p,q} =", pq_number(3))

# z only skew-commutes with x and y
print("z x      =", z * x)

t = theta(H)
print("theta    =", t)
print("theta normal:", check_normal(t, {"x": H.q, "y": H.q.inverse(), "z": 1}))

# Omega is central only after tying the parameters together
for r, s in [(1, 1), (2, 3)]:
    w = omega(r, s)
    print(f"Omega({r},{s}) central generically: {is_central(w)}, "
          f"with q^{r} = p^{s}: {is_central(w, OneParam(r, s))}")
