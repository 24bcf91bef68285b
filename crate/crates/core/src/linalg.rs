//! Small exact integer linear algebra: determinants, adjugates,
//! characteristic polynomials, Smith normal form and a numeric root
//! finder used by the hyperbolicity gate.

use num_bigint::BigInt;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Square integer matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn new(dim: usize, data: Vec<i64>) -> Option<Self> {
        if dim == 0 || data.len() != dim * dim {
            return None;
        }
        Some(IntMatrix { dim, data })
    }

    pub fn identity(dim: usize) -> Self {
        let mut data = vec![0; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = 1;
        }
        IntMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.data[row * self.dim + col]
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    fn wide(&self) -> Vec<i128> {
        self.data.iter().map(|&x| x as i128).collect()
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        (0..self.dim)
            .map(|r| {
                (0..self.dim)
                    .map(|c| BigInt::from(self.entry(r, c)) * &v[c])
                    .sum()
            })
            .collect()
    }

    pub fn det(&self) -> i128 {
        bareiss_det(self.wide(), self.dim)
    }

    /// Adjugate, so that `T · adj(T) = det(T) · I`.
    pub fn adjugate(&self) -> Vec<i128> {
        let d = self.dim;
        if d == 1 {
            return vec![1];
        }
        let full = self.wide();
        let mut adj = vec![0i128; d * d];
        for r in 0..d {
            for c in 0..d {
                let mut minor = Vec::with_capacity((d - 1) * (d - 1));
                for i in (0..d).filter(|&i| i != r) {
                    for j in (0..d).filter(|&j| j != c) {
                        minor.push(full[i * d + j]);
                    }
                }
                let sign = if (r + c) % 2 == 0 { 1 } else { -1 };
                // transpose of the cofactor matrix
                adj[c * d + r] = sign * bareiss_det(minor, d - 1);
            }
        }
        adj
    }

    /// Coefficients `[1, c1, ..., cd]` of `det(xI - T)`, highest degree first.
    pub fn char_poly(&self) -> Vec<i128> {
        // Faddeev-LeVerrier; every division below is exact over the integers.
        let d = self.dim;
        let a = self.wide();
        let mut coeffs = vec![1i128];
        let mut m = vec![0i128; d * d];
        let mut c_prev = 1i128;
        for k in 1..=d {
            // M_k = A M_{k-1} + c_{k-1} I
            let mut next = mat_mul(&a, &m, d);
            for i in 0..d {
                next[i * d + i] += c_prev;
            }
            m = next;
            let am = mat_mul(&a, &m, d);
            let trace: i128 = (0..d).map(|i| am[i * d + i]).sum();
            let c = -trace / k as i128;
            coeffs.push(c);
            c_prev = c;
        }
        coeffs
    }
}

fn mat_mul(a: &[i128], b: &[i128], d: usize) -> Vec<i128> {
    let mut out = vec![0i128; d * d];
    for i in 0..d {
        for k in 0..d {
            let aik = a[i * d + k];
            if aik == 0 {
                continue;
            }
            for j in 0..d {
                out[i * d + j] += aik * b[k * d + j];
            }
        }
    }
    out
}

fn bareiss_det(mut m: Vec<i128>, d: usize) -> i128 {
    if d == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..d - 1 {
        if m[k * d + k] == 0 {
            match (k + 1..d).find(|&r| m[r * d + k] != 0) {
                Some(r) => {
                    for j in 0..d {
                        m.swap(k * d + j, r * d + j);
                    }
                    sign = -sign;
                }
                None => return 0,
            }
        }
        let pivot = m[k * d + k];
        for i in k + 1..d {
            for j in k + 1..d {
                m[i * d + j] = (m[i * d + j] * pivot - m[i * d + k] * m[k * d + j]) / prev;
            }
        }
        prev = pivot;
    }
    sign * m[(d - 1) * d + (d - 1)]
}

/// All complex roots of a polynomial given highest-degree-first with a
/// leading coefficient of one (Durand-Kerner iteration).
pub fn poly_roots(coeffs: &[i128]) -> Vec<Complex64> {
    let degree = coeffs.len() - 1;
    if degree == 0 {
        return Vec::new();
    }
    let c: Vec<Complex64> = coeffs
        .iter()
        .map(|&x| Complex64::new(x as f64, 0.0))
        .collect();
    let eval = |z: Complex64| {
        c.iter()
            .fold(Complex64::new(0.0, 0.0), |acc, &k| acc * z + k)
    };
    // Cauchy bound for the initial circle.
    let bound = 1.0
        + coeffs[1..]
            .iter()
            .map(|&x| (x as f64).abs())
            .fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..degree)
        .map(|i| seed.powu(i as u32) * bound.min(2.0))
        .collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..degree {
            let zi = roots[i];
            let denom = (0..degree)
                .filter(|&j| j != i)
                .fold(Complex64::new(1.0, 0.0), |acc, j| acc * (zi - roots[j]));
            if denom.norm() == 0.0 {
                roots[i] += Complex64::new(1e-8, 1e-8);
                delta = f64::INFINITY;
                continue;
            }
            let step = eval(zi) / denom;
            roots[i] = zi - step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    // Newton polish against the original polynomial.
    let deriv: Vec<Complex64> = (0..degree).map(|i| c[i] * (degree - i) as f64).collect();
    let eval_d = |z: Complex64| {
        deriv
            .iter()
            .fold(Complex64::new(0.0, 0.0), |acc, &k| acc * z + k)
    };
    for root in roots.iter_mut() {
        for _ in 0..8 {
            let d = eval_d(*root);
            if d.norm() == 0.0 {
                break;
            }
            *root -= eval(*root) / d;
        }
    }
    roots
}

/// Smith normal form data for an integer matrix: an unimodular `left`
/// and the invariant factors `diag` such that `left · T · right = diag(...)`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub left: Vec<i128>,
    pub diag: Vec<i128>,
}

pub fn smith_normal_form(t: &IntMatrix) -> SmithForm {
    let d = t.dim();
    let mut a = t.wide();
    let mut left = IntMatrix::identity(d).wide();

    let row_op = |m: &mut Vec<i128>, target: usize, src: usize, factor: i128| {
        for j in 0..d {
            m[target * d + j] -= factor * m[src * d + j];
        }
    };
    let swap_rows = |m: &mut Vec<i128>, r1: usize, r2: usize| {
        for j in 0..d {
            m.swap(r1 * d + j, r2 * d + j);
        }
    };

    for k in 0..d {
        loop {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in k..d {
                for j in k..d {
                    let v = a[i * d + j];
                    if v != 0 && best.map_or(true, |(bi, bj)| v.abs() < a[bi * d + bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            if pi != k {
                swap_rows(&mut a, pi, k);
                swap_rows(&mut left, pi, k);
            }
            if pj != k {
                for i in 0..d {
                    a.swap(i * d + pj, i * d + k);
                }
            }
            let pivot = a[k * d + k];
            let mut clean = true;
            for i in k + 1..d {
                let q = a[i * d + k].div_euclid(pivot);
                if q != 0 {
                    row_op(&mut a, i, k, q);
                    row_op(&mut left, i, k, q);
                }
                if a[i * d + k] != 0 {
                    clean = false;
                }
            }
            for j in k + 1..d {
                let q = a[k * d + j].div_euclid(pivot);
                if q != 0 {
                    for i in 0..d {
                        a[i * d + j] -= q * a[i * d + k];
                    }
                }
                if a[k * d + j] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility condition on the trailing block
            let bad = (k + 1..d)
                .flat_map(|i| (k + 1..d).map(move |j| (i, j)))
                .find(|&(i, j)| a[i * d + j] % pivot != 0);
            match bad {
                Some((i, _)) => {
                    for j in 0..d {
                        a[k * d + j] += a[i * d + j];
                        left[k * d + j] += left[i * d + j];
                    }
                }
                None => break,
            }
        }
    }
    let diag = (0..d).map(|i| a[i * d + i].abs()).collect();
    SmithForm { left, diag }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_and_adjugate() {
        let t = IntMatrix::new(2, vec![2, 1, 1, 1]).unwrap();
        assert_eq!(t.det(), 1);
        assert_eq!(t.adjugate(), vec![1, -1, -1, 2]);
        let u = IntMatrix::new(3, vec![2, 0, 1, 1, 3, 0, 0, 1, 4]).unwrap();
        assert_eq!(u.det(), 25);
        let adj = u.adjugate();
        let prod = mat_mul(&u.wide(), &adj, 3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(prod[i * 3 + j], if i == j { 25 } else { 0 });
            }
        }
    }

    #[test]
    fn characteristic_polynomial() {
        let t = IntMatrix::new(2, vec![2, 1, 1, 1]).unwrap();
        assert_eq!(t.char_poly(), vec![1, -3, 1]);
        let r = IntMatrix::new(1, vec![3]).unwrap();
        assert_eq!(r.char_poly(), vec![1, -3]);
        let rot = IntMatrix::new(2, vec![0, -1, 1, 0]).unwrap();
        assert_eq!(rot.char_poly(), vec![1, 0, 1]);
    }

    #[test]
    fn roots_of_golden_polynomial() {
        let mut roots: Vec<f64> = poly_roots(&[1, -3, 1]).iter().map(|z| z.re).collect();
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let phi2 = (3.0 + 5f64.sqrt()) / 2.0;
        assert!((roots[1] - phi2).abs() < 1e-12);
        assert!((roots[0] - 1.0 / phi2).abs() < 1e-12);
    }

    #[test]
    fn smith_form_invariants() {
        let t = IntMatrix::new(2, vec![2, 0, 0, 3]).unwrap();
        let snf = smith_normal_form(&t);
        let mut diag = snf.diag.clone();
        diag.sort();
        assert_eq!(diag, vec![1, 6]);
        let u = IntMatrix::new(2, vec![3, 1, 1, 2]).unwrap();
        let snf = smith_normal_form(&u);
        assert_eq!(snf.diag.iter().product::<i128>(), 5);
    }
}
