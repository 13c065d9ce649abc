//! Subresultant pseudo-remainder sequences over an arbitrary [`Ring`].
//!
//! This is the elimination backbone: exact resultants, polynomial gcds over
//! ℤ, and the remainder chains whose low-degree members drive the
//! back-substitution steps (a common root (x₀, y₀) of the two inputs is a
//! root of every chain member whose chain leading coefficients do not vanish
//! at x₀).

use super::Poly;
use crate::ring::Ring;
use crate::Int;

/// Pseudo-remainder: lc(B)^(δ+1)·A reduced by B, δ = deg A − deg B.
pub fn pseudo_rem<T: Ring>(a: &Poly<T>, b: &Poly<T>) -> Poly<T> {
    assert!(!b.is_zero());
    let db = b.deg();
    let mut r = a.clone();
    let lcb = b.lc();
    if r.degree().map_or(true, |d| d < db) {
        return r;
    }
    let delta = r.deg() - db;
    for _ in 0..=delta {
        match r.degree() {
            Some(dr) if dr >= db => {
                let q = r.lc();
                r = r.scale(&lcb).sub(&b.scale(&q).shift_up(dr - db));
            }
            _ => r = r.scale(&lcb),
        }
    }
    r
}

/// A subresultant pseudo-remainder sequence for (A, B), deg A ≥ deg B ≥ 0.
pub struct PrsChain<T> {
    /// A, B, then the successive subresultant remainders, ending at the
    /// last nonzero member.
    pub members: Vec<Poly<T>>,
    /// The resultant of the two inputs.
    pub resultant: T,
}

impl<T: Ring> PrsChain<T> {
    /// Members of the given degree (usually used with degree 1).
    pub fn member_of_degree(&self, d: usize) -> Option<&Poly<T>> {
        self.members.iter().find(|m| m.degree() == Some(d))
    }

    /// Leading coefficients of all members of positive degree. A common
    /// root specializes the whole chain as long as none of these vanish
    /// there.
    pub fn positive_degree_lcs(&self) -> Vec<T> {
        self.members
            .iter()
            .filter(|m| m.degree().map_or(false, |d| d >= 1))
            .map(|m| m.lc())
            .collect()
    }
}

/// Brown's subresultant PRS, with Cohen's sign bookkeeping for the
/// resultant. Inputs may have any degrees; zero inputs give resultant 0.
pub fn subresultant_prs<T: Ring>(a0: &Poly<T>, b0: &Poly<T>) -> PrsChain<T> {
    if a0.is_zero() || b0.is_zero() {
        return PrsChain {
            members: vec![a0.clone(), b0.clone()],
            resultant: T::zero(),
        };
    }
    let (mut a, mut b, mut sign) = if a0.deg() < b0.deg() {
        let s = if a0.deg() % 2 == 1 && b0.deg() % 2 == 1 {
            -1i32
        } else {
            1
        };
        (b0.clone(), a0.clone(), s)
    } else {
        (a0.clone(), b0.clone(), 1)
    };
    let mut members = vec![a.clone(), b.clone()];

    if b.deg() == 0 {
        let res = if a.deg() == 0 {
            T::one()
        } else {
            b.lc().pow(a.deg() as u32)
        };
        return PrsChain {
            members,
            resultant: signed(res, sign),
        };
    }

    let mut g = T::one();
    let mut h = T::one();
    loop {
        let da = a.deg();
        let db = b.deg();
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        let divisor = g.mul(&h.pow(delta));
        b = if r.is_zero() {
            Poly::zero()
        } else {
            r.map(|c| c.exact_div(&divisor))
        };
        g = a.lc();
        if delta >= 1 {
            h = g.pow(delta).exact_div(&h.pow(delta - 1));
        }
        if b.is_zero() {
            // positive-degree common factor: resultant is zero
            return PrsChain {
                members,
                resultant: T::zero(),
            };
        }
        members.push(b.clone());
        if b.deg() == 0 {
            break;
        }
    }
    // res = sign · lc(B)^{deg A} / h^{deg A − 1}
    let da = a.deg() as u32;
    let res = if da == 0 {
        T::one()
    } else {
        b.lc().pow(da).exact_div(&h.pow(da - 1))
    };
    PrsChain {
        members,
        resultant: signed(res, sign),
    }
}

fn signed<T: Ring>(x: T, s: i32) -> T {
    if s < 0 {
        x.neg()
    } else {
        x
    }
}

/// Exact resultant of two rational polynomials.
pub fn resultant_rat(p: &Poly<crate::Rat>, q: &Poly<crate::Rat>) -> crate::Rat {
    use crate::Rat;
    if p.is_zero() || q.is_zero() {
        return num_traits::Zero::zero();
    }
    let (pi, ps) = p.to_int_primitive();
    let (qi, qs) = q.to_int_primitive();
    let chain = subresultant_prs(&pi, &qi);
    let base = Rat::from_integer(chain.resultant);
    // Res(c·P, Q) = c^{deg Q}·Res(P, Q)
    let mut scale = Rat::from_integer(Int::from(1));
    for _ in 0..q.deg() {
        scale *= &ps;
    }
    for _ in 0..p.deg() {
        scale *= &qs;
    }
    base * scale
}

/// Positive-content gcd of two integer polynomials (primitive output).
pub fn gcd_int(a: &Poly<Int>, b: &Poly<Int>) -> Poly<Int> {
    use crate::ring::OrderedRing;
    if a.is_zero() {
        return normalize_sign(b.primitive_part());
    }
    if b.is_zero() {
        return normalize_sign(a.primitive_part());
    }
    let (mut p, mut q) = if a.deg() >= b.deg() {
        (a.primitive_part(), b.primitive_part())
    } else {
        (b.primitive_part(), a.primitive_part())
    };
    loop {
        let r = pseudo_rem(&p, &q).primitive_part();
        if r.is_zero() {
            let mut g = q.primitive_part();
            if OrderedRing::sign(&g.lc()) < 0 {
                g = g.neg();
            }
            return g;
        }
        p = q;
        q = r;
        if q.deg() == 0 {
            return Poly::one();
        }
    }
}

fn normalize_sign(p: Poly<Int>) -> Poly<Int> {
    use crate::ring::OrderedRing;
    if !p.is_zero() && OrderedRing::sign(&p.lc()) < 0 {
        p.neg()
    } else {
        p
    }
}

/// Squarefree part of an integer polynomial (primitive, positive lc).
pub fn squarefree_part_int(p: &Poly<Int>) -> Poly<Int> {
    if p.is_zero() {
        return Poly::zero();
    }
    if p.deg() == 0 {
        return Poly::one();
    }
    let g = gcd_int(p, &p.derivative());
    if g.deg() == 0 {
        return normalize_sign(p.primitive_part());
    }
    normalize_sign(p.primitive_part().exact_div_poly(&g).primitive_part())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, Rat};
    use rand::{Rng, SeedableRng};

    fn ip(cs: &[i64]) -> Poly<Int> {
        Poly::from_coeffs(cs.iter().map(|&c| Int::from(c)).collect())
    }

    fn rp(cs: &[i64]) -> Poly<Rat> {
        Poly::from_coeffs(cs.iter().map(|&c| rat(c)).collect())
    }

    /// Sylvester-matrix determinant over ℚ, the independent oracle.
    fn sylvester_resultant(p: &Poly<Rat>, q: &Poly<Rat>) -> Rat {
        let (m, n) = (p.deg(), q.deg());
        if m == 0 && n == 0 {
            return rat(1);
        }
        let size = m + n;
        let mut mat = vec![vec![Rat::from_integer(Int::from(0)); size]; size];
        for row in 0..n {
            for (i, _) in (0..=m).enumerate() {
                mat[row][row + i] = p.coeff(m - i);
            }
        }
        for row in 0..m {
            for (i, _) in (0..=n).enumerate() {
                mat[n + row][row + i] = q.coeff(n - i);
            }
        }
        // plain fraction elimination
        let mut det = rat(1);
        let mut a = mat;
        for col in 0..size {
            let piv = (col..size).find(|&r| !num_traits::Zero::is_zero(&a[r][col]));
            let piv = match piv {
                Some(p) => p,
                None => return rat(0),
            };
            if piv != col {
                a.swap(piv, col);
                det = -det;
            }
            det *= a[col][col].clone();
            let inv = Rat::new(Int::from(1), Int::from(1)) / a[col][col].clone();
            for r in col + 1..size {
                if num_traits::Zero::is_zero(&a[r][col]) {
                    continue;
                }
                let factor = a[r][col].clone() * &inv;
                for c in col..size {
                    let sub = a[col][c].clone() * &factor;
                    a[r][c] -= sub;
                }
            }
        }
        det
    }

    #[test]
    fn resultant_examples() {
        // shared root
        assert_eq!(resultant_rat(&rp(&[-1, 1]), &rp(&[-1, 1])), rat(0));
        // disjoint root sets, hand oracle ∏(αᵢ−βⱼ)
        assert_eq!(resultant_rat(&rp(&[1, 0, 1]), &rp(&[-1, 0, 1])), rat(4));
        // evaluation oracle Res(t, q) = q(0)
        assert_eq!(resultant_rat(&rp(&[0, 1]), &rp(&[3, 0, 1])), rat(3));
    }

    #[test]
    fn resultant_sign_symmetry() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let dp = rng.gen_range(1..=5);
            let dq = rng.gen_range(1..=5);
            let p: Poly<Rat> = Poly::from_coeffs(
                (0..=dp).map(|_| rat(rng.gen_range(-5..=5))).collect(),
            );
            let q: Poly<Rat> = Poly::from_coeffs(
                (0..=dq).map(|_| rat(rng.gen_range(-5..=5))).collect(),
            );
            if p.is_zero() || q.is_zero() {
                continue;
            }
            let r1 = resultant_rat(&p, &q);
            let r2 = resultant_rat(&q, &p);
            let s = if p.deg() * q.deg() % 2 == 1 { -1 } else { 1 };
            assert_eq!(r1, crate::rat(s) * r2);
        }
    }

    #[test]
    fn resultant_matches_sylvester_determinant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..80 {
            let dp = rng.gen_range(1..=6);
            let dq = rng.gen_range(1..=6);
            let mut pc: Vec<Rat> = (0..=dp).map(|_| rat(rng.gen_range(-6..=6))).collect();
            let mut qc: Vec<Rat> = (0..=dq).map(|_| rat(rng.gen_range(-6..=6))).collect();
            if num_traits::Zero::is_zero(&pc[dp]) {
                pc[dp] = rat(1);
            }
            if num_traits::Zero::is_zero(&qc[dq]) {
                qc[dq] = rat(2);
            }
            let p = Poly::from_coeffs(pc);
            let q = Poly::from_coeffs(qc);
            assert_eq!(resultant_rat(&p, &q), sylvester_resultant(&p, &q));
        }
    }

    #[test]
    fn gcd_and_squarefree() {
        // (t-1)^2 (t+2)
        let p = ip(&[-1, 1]).mul(&ip(&[-1, 1])).mul(&ip(&[2, 1]));
        let g = gcd_int(&p, &p.derivative());
        assert_eq!(g, ip(&[-1, 1]));
        assert_eq!(squarefree_part_int(&p), ip(&[-1, 1]).mul(&ip(&[2, 1])));
    }

    #[test]
    fn bivariate_chain_resultant() {
        // A = y^2 - x, B = y - x: common zero iff x^2 = x; Res_y = x^2 - x
        let x = Poly::<Int>::x();
        let a: Poly<Poly<Int>> =
            Poly::from_coeffs(vec![x.neg(), Poly::zero(), Poly::one()]);
        let b: Poly<Poly<Int>> = Poly::from_coeffs(vec![x.neg(), Poly::one()]);
        let chain = subresultant_prs(&a, &b);
        let expected = x.mul(&x).sub(&x);
        assert_eq!(chain.resultant, expected);
    }
}
