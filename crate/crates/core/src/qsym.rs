//! Quantum elementary and complete homogeneous symmetric polynomials, the
//! factorized elementary/complete polynomials indexed by sequences, and the
//! alphabet-reversing involution.
//!
//! The generating polynomial is the tridiagonal determinant
//!
//! ```text
//!             | x_1+t   q_1                      |
//!             |  -1    x_2+t   q_2               |
//! D_k(t|x) =  |         -1    x_3+t  ...         | = sum_j t^{k-j} e~_j(x_1..x_k | q_1..q_{k-1})
//!             |                ...        q_{k-1}|
//!             |                 -1      x_k+t    |
//! ```
//!
//! Every quantum symmetric polynomial here is computed by two independent
//! routes (determinant vs recurrence, determinant vs series inversion) and
//! the two are asserted equal.

use crate::error::{Error, Result};
use crate::polyring::{Poly, VarId};

/// Symbolic determinant by cofactor expansion along the first column.
/// Fine for the small matrices used here.
pub fn det_poly(m: &[Vec<Poly>]) -> Poly {
    let k = m.len();
    assert!(k > 0 && m.iter().all(|row| row.len() == k));
    let n = m[0][0].context();
    if k == 1 {
        return m[0][0].clone();
    }
    let mut acc = Poly::zero(n);
    for r in 0..k {
        if m[r][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = (0..k)
            .filter(|&rr| rr != r)
            .map(|rr| m[rr][1..].to_vec())
            .collect();
        let cofactor = det_poly(&minor).mul(&m[r][0]);
        if r % 2 == 0 {
            acc = acc.add(&cofactor);
        } else {
            acc = acc.sub(&cofactor);
        }
    }
    acc
}

/// The tridiagonal matrix of D_m(t|x) in the ambient context n, with `t`
/// the auxiliary variable t_1.
fn delta_matrix(m: u32, n: u32) -> Vec<Vec<Poly>> {
    let t = Poly::var(n, VarId::t(1));
    (1..=m)
        .map(|r| {
            (1..=m)
                .map(|c| {
                    if r == c {
                        Poly::var(n, VarId::x(r)).add(&t)
                    } else if c == r + 1 {
                        Poly::var(n, VarId::q(r))
                    } else if r == c + 1 {
                        Poly::int(n, -1)
                    } else {
                        Poly::zero(n)
                    }
                })
                .collect()
        })
        .collect()
}

/// D_m(t|x_1..x_m) as a polynomial in t = t_1 with x,q coefficients.
pub fn delta_poly(m: u32, n: u32) -> Poly {
    assert!(m <= n);
    if m == 0 {
        return Poly::one(n);
    }
    det_poly(&delta_matrix(m, n))
}

/// e~_k(x_1..x_m | q_1..q_{m-1}) by the three-term recurrence
/// e~_k^N = e~_k^{N-1} + x_N e~_{k-1}^{N-1} + q_{N-1} e~_{k-2}^{N-2}.
fn quantum_e_rec(k: i64, m: u32, n: u32) -> Poly {
    if k < 0 || k as u32 > m {
        return Poly::zero(n);
    }
    if k == 0 {
        return Poly::one(n);
    }
    let x_m = Poly::var(n, VarId::x(m));
    let mut res = quantum_e_rec(k, m - 1, n).add(&x_m.mul(&quantum_e_rec(k - 1, m - 1, n)));
    if m >= 2 {
        let q = Poly::var(n, VarId::q(m - 1));
        res = res.add(&q.mul(&quantum_e_rec(k - 2, m - 2, n)));
    }
    res
}

/// Quantum elementary symmetric polynomial e~_k(x_1..x_m | q_1..q_{m-1}),
/// in the ambient context n. Computed both as a determinant coefficient and
/// by the recurrence; the two must agree.
pub fn quantum_e(k: u32, m: u32, n: u32) -> Poly {
    assert!(k <= m && m <= n, "need k <= m <= n, got k={k}, m={m}, n={n}");
    let rec = quantum_e_rec(k as i64, m, n);
    let det_route = delta_poly(m, n).coeff_of_power(VarId::t(1), m - k);
    assert_eq!(rec, det_route, "determinant and recurrence disagree at k={k}, m={m}");
    rec
}

/// Classical elementary symmetric polynomial e_k(x_1..x_m).
pub fn classical_e(k: u32, m: u32, n: u32) -> Poly {
    let qs: Vec<VarId> = (1..2 * n).map(VarId::q).collect();
    quantum_e(k, m, n).set_zero(&qs)
}

/// Quantum complete homogeneous polynomial h~_k(x_1..x_m), via the
/// determinant in the e~'s, cross-checked against inversion of the
/// generating series.
pub fn quantum_h(k: u32, m: u32, n: u32) -> Poly {
    assert!(m >= 1 && m <= n);
    if k == 0 {
        return Poly::one(n);
    }
    // determinant route: det( e~_{j-i+1}(x_1..x_m) ) for 1 <= i,j <= k
    let e = |d: i64| -> Poly {
        if d < 0 || d as u32 > m {
            Poly::zero(n)
        } else {
            quantum_e(d as u32, m, n)
        }
    };
    let mat: Vec<Vec<Poly>> = (1..=k as i64)
        .map(|i| (1..=k as i64).map(|j| e(j - i + 1)).collect())
        .collect();
    let det_route = det_poly(&mat);

    // series route: invert sum_j (-1)^j e~_j(x|q) t^j  up to order k; the
    // coefficients of the inverse are the h~'s.
    let signed_e: Vec<Poly> = (0..=m as i64)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            e(j).scale_int(sign)
        })
        .collect();
    let mut h: Vec<Poly> = Vec::with_capacity(k as usize + 1);
    h.push(Poly::one(n));
    for d in 1..=k as usize {
        let mut acc = Poly::zero(n);
        for j in 1..=d.min(m as usize) {
            acc = acc.add(&signed_e[j].mul(&h[d - j]));
        }
        h.push(acc.neg());
    }
    let series_route = h.pop().unwrap();
    assert_eq!(
        det_route, series_route,
        "determinant and series inversion disagree at k={k}, m={m}"
    );
    det_route
}

pub fn classical_h(k: u32, m: u32, n: u32) -> Poly {
    let qs: Vec<VarId> = (1..2 * n).map(VarId::q).collect();
    quantum_h(k, m, n).set_zero(&qs)
}

/// The full-alphabet quantum complete polynomial: the determinant
/// det( e~_{j-i+1}(x_1..x_{m+k-i}) ), 1 <= i,j <= k, whose entries see the
/// whole alphabet (requires m + k <= n + 1). Its restriction (discarding
/// x_{m+1},... and q_m,...) is `quantum_h(k, m, n)`; unlike that
/// restriction, for m + k = n + 1 it lies in the quantum ideal, with
/// leading term x_m^k. At q = 0 both versions agree.
pub fn quantum_h_full(k: u32, m: u32, n: u32) -> Poly {
    assert!(m >= 1 && m + k <= n + 1, "need m + k <= n + 1, got m={m}, k={k}, n={n}");
    if k == 0 {
        return Poly::one(n);
    }
    let e = |d: i64, s: u32| -> Poly {
        if d < 0 || d as u32 > s {
            Poly::zero(n)
        } else {
            quantum_e(d as u32, s, n)
        }
    };
    let mat: Vec<Vec<Poly>> = (1..=k as i64)
        .map(|i| {
            let s = m + k - i as u32;
            (1..=k as i64).map(|j| e(j - i + 1, s)).collect()
        })
        .collect();
    det_poly(&mat)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    Elementary,
    QElementary,
    Complete,
    QComplete,
}

/// Index sequence for a factorized (quantum) elementary or complete
/// polynomial. Elementary kinds use x_1..x_{n-k} in factor k; complete
/// kinds use x_1..x_k in factor k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorIndex {
    pub entries: Vec<u32>,
    pub kind: FactorKind,
}

impl FactorIndex {
    pub fn new(entries: Vec<u32>, kind: FactorKind) -> Self {
        FactorIndex { entries, kind }
    }

    /// Membership in the index set T: 0 <= i_k <= n-k.
    pub fn in_t(&self, n: u32) -> bool {
        self.entries.len() < n as usize + 1
            && self
                .entries
                .iter()
                .enumerate()
                .all(|(k, &e)| e <= n - (k as u32 + 1))
    }

    pub fn poly(&self, n: u32) -> Result<Poly> {
        let mut acc = Poly::one(n);
        for (idx, &deg) in self.entries.iter().enumerate() {
            let k = idx as u32 + 1;
            if deg == 0 {
                continue;
            }
            let vars = match self.kind {
                FactorKind::Elementary | FactorKind::QElementary => n - k,
                FactorKind::Complete | FactorKind::QComplete => k,
            };
            if vars == 0 || deg > match self.kind {
                FactorKind::Elementary | FactorKind::QElementary => vars,
                _ => u32::MAX,
            } {
                return Err(Error::UnsupportedSize {
                    n,
                    what: "factor index entry out of range",
                    max: vars,
                });
            }
            let factor = match self.kind {
                FactorKind::Elementary => classical_e(deg, vars, n),
                FactorKind::QElementary => quantum_e(deg, vars, n),
                FactorKind::Complete => classical_h(deg, vars, n),
                FactorKind::QComplete => quantum_h(deg, vars, n),
            };
            acc = acc.mul(&factor);
        }
        Ok(acc)
    }
}

/// All sequences in T (0 <= i_k <= n-k, k = 1..n-1), with |T| = n!.
pub fn all_t_sequences(n: u32) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![vec![]];
    for k in 1..n {
        let mut next = Vec::new();
        for prefix in &out {
            for e in 0..=(n - k) {
                let mut v = prefix.clone();
                v.push(e);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// The variable-reversing ring involution: x_i -> x_{n+1-i},
/// y_i -> y_{n+1-i}, q_i -> q_{n-i}. Auxiliary t variables are fixed.
pub fn omega(f: &Poly) -> Poly {
    let n = f.context();
    let mut map = std::collections::BTreeMap::new();
    for i in 1..=n {
        map.insert(VarId::x(i), VarId::x(n + 1 - i));
        map.insert(VarId::y(i), VarId::y(n + 1 - i));
    }
    for i in 1..n {
        map.insert(VarId::q(i), VarId::q(n - i));
    }
    f.rename(&map)
}
