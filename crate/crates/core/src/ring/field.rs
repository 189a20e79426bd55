//! GF(p^k) as polynomials over GF(p) modulo a fixed monic irreducible.

use smallvec::SmallVec;

use super::Elem;

type Digits = SmallVec<[u64; 16]>;

/// Arithmetic of GF(p^k). Element index `Σ c_i p^i` stands for `Σ c_i a^i`
/// where `a` is a root of the modulus.
#[derive(Debug, Clone)]
pub(crate) struct GaloisField {
    pub p: u64,
    pub k: usize,
    /// Monic modulus, coefficients from degree 0 up to degree `k`.
    pub modulus: Vec<u64>,
}

impl GaloisField {
    /// The modulus is the monic irreducible of degree `k` whose lower
    /// coefficients, read as base-`p` digits with the constant term least
    /// significant, form the smallest integer.
    pub fn new(p: u64, k: usize) -> Self {
        let q = p.pow(k as u32);
        let modulus = (0..q)
            .map(|tail| {
                let mut m: Vec<u64> = to_digits(tail, p, k).into_vec();
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial of every degree exists");
        GaloisField { p, k, modulus }
    }

    pub fn digits(&self, x: Elem) -> Digits {
        to_digits(x, self.p, self.k)
    }

    pub fn from_digits(&self, d: &[u64]) -> Elem {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Digits = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.from_digits(&s)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.k == 1 {
            return (self.p - a) % self.p;
        }
        let s: Digits = self
            .digits(a)
            .iter()
            .map(|x| (self.p - x) % self.p)
            .collect();
        self.from_digits(&s)
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let p = self.p;
        if self.k == 1 {
            return ((a as u128 * b as u128) % p as u128) as u64;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod: Digits = SmallVec::from_elem(0, 2 * self.k - 1);
        for (i, x) in da.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for deg in (self.k..prod.len()).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            let shift = deg - self.k;
            for (i, m) in self.modulus.iter().enumerate() {
                prod[shift + i] = (prod[shift + i] + (p - c) * m) % p;
            }
        }
        self.from_digits(&prod[..self.k])
    }
}

pub(crate) fn to_digits(mut x: u64, radix: u64, len: usize) -> Digits {
    let mut out = SmallVec::with_capacity(len);
    for _ in 0..len {
        out.push(x % radix);
        x /= radix;
    }
    out
}

fn poly_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    // g monic
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if c != 0 {
            for (i, gi) in g.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - c) * gi) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = f.len() - 1;
    if n == 1 {
        return true;
    }
    for d in 1..=n / 2 {
        for tail in 0..p.pow(d as u32) {
            let mut g: Vec<u64> = to_digits(tail, p, d).into_vec();
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chosen_moduli() {
        assert_eq!(GaloisField::new(2, 2).modulus, vec![1, 1, 1]);
        assert_eq!(GaloisField::new(2, 3).modulus, vec![1, 1, 0, 1]);
        assert_eq!(GaloisField::new(3, 2).modulus, vec![1, 0, 1]);
        assert_eq!(GaloisField::new(5, 1).modulus, vec![0, 1]);
    }

    #[test]
    fn every_nonzero_element_is_invertible() {
        for (p, k) in [(2, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 4)] {
            let f = GaloisField::new(p, k);
            let q = p.pow(k as u32);
            for a in 1..q {
                assert!((1..q).any(|b| f.mul(a, b) == 1), "GF({p},{k}) a={a}");
            }
            // the multiplicative group is cyclic
            let cyclic = (1..q).any(|g| {
                let mut seen = std::collections::HashSet::new();
                let mut x = 1;
                for _ in 0..q - 1 {
                    seen.insert(x);
                    x = f.mul(x, g);
                }
                seen.len() as u64 == q - 1
            });
            assert!(cyclic);
        }
    }
}
