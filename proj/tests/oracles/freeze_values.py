"""Independent sympy oracle used to freeze expected values for the C++ tests.

Run: python3 tests/oracles/freeze_values.py
"""
from sympy import Rational as R, bernoulli, symbols, series, exp, factorial, binomial, expand, Poly, cyclotomic_poly, sech

t, x = symbols("t x")


def coeffs(expr, n):
    s = series(expr, t, 0, n + 1).removeO()
    return [s.coeff(t, k) * factorial(k) for k in range(n + 1)]


def B(n, arg):
    # sympy >= 1.12 uses B_1 = +1/2 for bernoulli(1); build B_n(x) from t e^{xt}/(e^t-1) instead.
    s = series(t * exp(arg * t) / (exp(t) - 1), t, 0, n + 1).removeO()
    return expand(s.coeff(t, n) * factorial(n))


print("B_n via t/(e^t-1):", coeffs(t / (exp(t) - 1), 12))
print("E_n via 2/(e^t+1):", coeffs(2 / (exp(t) + 1), 8))
print("G_n via 2t/(e^t+1):", coeffs(2 * t / (exp(t) + 1), 8))
print("Phi_12:", cyclotomic_poly(12, x))
print("B_2((1+x)/2):", expand(B(2, R(1, 2) + x / 2)))

# chi = nontrivial character mod 4: chi(1)=1, chi(3)=-1
chi4 = {0: 0, 1: 1, 2: 0, 3: -1}
num = 2 * sum((-1) ** (l - 1) * chi4[l] * exp(l * t) for l in range(4))
print("E_{n,chi4}(0) series:", coeffs(num / (exp(4 * t) - 1), 8))
print("-sech:", coeffs(-sech(t), 8))

# Theorem 1 sides
def thm1_rhs(d, n):
    return R(d) ** n / (n + 1) * sum((-1) ** (l - 1) * B(n + 1, R(l, d)) for l in range(d))
print("thm1 d=2 n=1:", thm1_rhs(2, 1), " d=4 n=0:", thm1_rhs(4, 0))

def Epoly(n, arg):
    s = series(2 * exp(arg * t) / (exp(t) + 1), t, 0, n + 1).removeO()
    return expand(s.coeff(t, n) * factorial(n))
print("thm2 d=6 n=5: lhs", (Epoly(5, 6) - Epoly(5, 0)) / 2, " rhs", sum((-1) ** (l - 1) * l ** 5 for l in range(6)))
print("thm2 part1 d=6 n=5:", sum((-1) ** (l - 1) * R(l, 6) ** 5 for l in range(6)))

# Theorem 3 d=8 n=6: G_6(x)/2
G6 = expand(6 * Epoly(5, x) / 2)
rhs = expand(R(8) ** 5 * sum((-1) ** (l - 1) * B(6, (l + x) / 8) for l in range(8)))
print("thm3 d=8 n=6 equal:", expand(G6 - rhs) == 0, Poly(G6, x).all_coeffs()[::-1])

# Fermionic partial sums
print("partial p=3 N=1 n=1:", sum((-1) ** j * j for j in range(3)))
p, N, n = 5, 3, 4
S = sum((-1) ** j * j ** n for j in range(p ** N))
print("partial p=5 N=3 n=4:", S, " (E_n(p^N)+E_n)/2:", (Epoly(n, p ** N) + Epoly(n, 0)) / 2, " diff from E_4:", S - Epoly(4, 0))

# shift equation n_shift=4 k=3
print("shift s=4 k=3:", Epoly(3, 4) + (-1) ** 3 * Epoly(3, 0), 2 * sum((-1) ** (4 - 1 - l) * l ** 3 for l in range(4)))

# eq17 trivial mod 8, n=2, k=3: E_{k,chi}(x) = G_{k+1,chi}(x)/(k+1) closed form
chi8 = {l: (1 if l % 2 == 1 else 0) for l in range(8)}
def Gchi(n, arg, chi, d):
    return expand(2 * R(d) ** (n - 1) * sum((-1) ** (l - 1) * chi[l] * B(n, (l + arg) / d) for l in range(d)))
def Echi(k, arg, chi, d):
    return expand(Gchi(k + 1, arg, chi, d) / (k + 1))
T = lambda k, chi, d, up: sum((-1) ** (l - 1) * chi[l % d] * (l ** k if (l, k) != (0, 0) else 1) for l in range(up + 1))
print("eq17 trivial mod 8 n=2 k=3:", Echi(3, 16, chi8, 8) - Echi(3, 0, chi8, 8), 2 * T(3, chi8, 8, 15))
print("G_{0,trivial mod 4}:", Gchi(0, x, {0: 0, 1: 1, 2: 0, 3: 1}, 4))
print("G_{1,chi4}(0):", Gchi(1, 0, chi4, 4))

# Theorem 5 reference: chi4, w1=1 w2=3, x=0 and w1=2 w2=3, x=1/2
def thm5_side(chi, d, w1, w2, N, xv):
    tot = 0
    for i in range(N + 1):
        inner = sum((-1) ** (a - 1) * chi[a] * B(i + 1, (a + w2 * xv) / d) for a in range(d))
        tot += binomial(N, i) * R(d) ** i / (i + 1) * inner * T(N - i, chi, d, d * w1 - 1) * w1 ** i * w2 ** (N - i)
    return tot
def Kcoef(chi, d, w1, w2, N, xv):
    A = lambda w: sum(chi[a] * (-1) ** (a - 1) * exp(w * a * t) for a in range(d))
    K = 2 * (exp(d * w1 * w2 * t) - 1) / ((exp(w1 * d * t) - 1) * (exp(w2 * d * t) - 1)) * A(w1) * A(w2) * exp(w1 * w2 * xv * t)
    return coeffs(K, N)[N] / 2
for (w1, w2, xv) in [(1, 3, 0), (2, 3, R(1, 2))]:
    for N in range(0, 5):
        print("thm5", w1, w2, xv, N, thm5_side(chi4, 4, w1, w2, N, xv), thm5_side(chi4, 4, w2, w1, N, xv), Kcoef(chi4, 4, w1, w2, N, xv))
