//! Arithmetic in GF(p^k).
//!
//! Elements are little-endian coefficient vectors of length `k` over GF(p),
//! reduced modulo a monic irreducible polynomial of degree `k`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coeffs: Vec<u32>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u64,
    /// Monic modulus, little-endian, length `k + 1`.
    modulus: Vec<u32>,
}

/// Writes `q = p^k` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let (mut rest, mut k) = (q, 0u32);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p as u32, k))
}

// Remainder of `a` modulo the monic polynomial `m` over GF(p), little-endian.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let off = r.len() - dm;
            for (i, &c) in m[..dm].iter().enumerate() {
                let sub = (u64::from(lead) * u64::from(c) % u64::from(p)) as u32;
                r[off + i] = (r[off + i] + p - sub) % p;
            }
        }
    }
    r
}

// Monic polynomial of degree `deg` whose lower coefficients are the base-`p`
// digits of `m` (digit i is the coefficient of x^i).
fn monic_from_index(mut m: u64, deg: u32, p: u32) -> Vec<u32> {
    let mut coeffs = Vec::with_capacity(deg as usize + 1);
    for _ in 0..deg {
        coeffs.push((m % u64::from(p)) as u32);
        m /= u64::from(p);
    }
    coeffs.push(1);
    coeffs
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = (f.len() - 1) as u32;
    (1..=k / 2).all(|d| {
        (0..u64::from(p).pow(d)).all(|m| {
            let g = monic_from_index(m, d, p);
            poly_rem(f, &g, p).iter().any(|&c| c != 0)
        })
    })
}

/// Smallest monic irreducible polynomial of degree `k` over GF(p).
///
/// Candidates are ordered by their coefficient tuple from `x^(k-1)` down to
/// the constant term; irreducibility is certified by trial division by every
/// monic polynomial of degree at most `k / 2`. Returned little-endian with
/// the leading 1 included.
pub fn find_irreducible(p: u32, k: u32) -> Vec<u32> {
    assert!(k >= 1, "degree must be positive");
    (0..u64::from(p).pow(k))
        .map(|m| monic_from_index(m, k, p))
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial of every degree exists")
}

/// Field of order `q`, erroring when `q` is not a prime power.
pub fn make_field(q: u64) -> Result<FiniteField> {
    let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    Ok(FiniteField {
        p,
        k,
        q,
        modulus: find_irreducible(p, k),
    })
}

impl FiniteField {
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.k as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// Element whose coefficients are the base-`p` digits of `index`.
    pub fn element(&self, mut index: u64) -> FieldElement {
        assert!(index < self.q, "index {index} outside GF({})", self.q);
        let coeffs = (0..self.k)
            .map(|_| {
                let c = (index % u64::from(self.p)) as u32;
                index /= u64::from(self.p);
                c
            })
            .collect();
        FieldElement { coeffs }
    }

    /// Inverse of [`FiniteField::element`].
    pub fn index(&self, a: &FieldElement) -> u64 {
        a.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * u64::from(self.p) + u64::from(c))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|i| self.element(i))
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.k as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidArgument(format!(
                "{coeffs:?} is not an element of GF({})",
                self.q
            )));
        }
        Ok(FieldElement {
            coeffs: coeffs.to_vec(),
        })
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let k = self.k as usize;
        let p = u64::from(self.p);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u64::from(x) * u64::from(y)) % p;
            }
        }
        let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
        let mut coeffs = if prod.len() > k {
            poly_rem(&prod, &self.modulus, self.p)
        } else {
            prod
        };
        coeffs.resize(k, 0);
        FieldElement { coeffs }
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via `a^(q-2)`.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// Human-readable modulus such as `x^2+x+1`.
    pub fn modulus_string(&self) -> String {
        poly_string(&self.modulus)
    }

    /// Addition and multiplication tables over element indices.
    pub fn tables(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let elems: Vec<FieldElement> = self.elements().collect();
        let table = |op: &dyn Fn(&FieldElement, &FieldElement) -> FieldElement| {
            elems
                .iter()
                .map(|a| elems.iter().map(|b| self.index(&op(a, b)) as usize).collect())
                .collect()
        };
        (table(&|a, b| self.add(a, b)), table(&|a, b| self.mul(a, b)))
    }
}

/// Renders a little-endian coefficient list as a polynomial in `x`.
pub fn poly_string(coeffs: &[u32]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|&(_, &c)| c != 0)
        .map(|(i, &c)| {
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => var,
                _ => format!("{c}{var}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}) = GF({})[x]/({})", self.q, self.p, self.modulus_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reducibility oracle: f is reducible iff it is a product of two monic
    // polynomials of positive degree. Enumerates all such products.
    fn reducible_by_products(f: &[u32], p: u32) -> bool {
        let k = f.len() as u32 - 1;
        for d in 1..k {
            for a in 0..u64::from(p).pow(d) {
                for b in 0..u64::from(p).pow(k - d) {
                    let g = monic_from_index(a, d, p);
                    let h = monic_from_index(b, k - d, p);
                    let mut prod = vec![0u32; f.len()];
                    for (i, &x) in g.iter().enumerate() {
                        for (j, &y) in h.iter().enumerate() {
                            prod[i + j] = (prod[i + j] + x * y) % p;
                        }
                    }
                    if prod == f {
                        return true;
                    }
                }
            }
        }
        false
    }

    #[test]
    fn make_field_examples() {
        let f = make_field(5).unwrap();
        assert_eq!((f.characteristic(), f.degree()), (5, 1));
        let f = make_field(4).unwrap();
        assert_eq!((f.characteristic(), f.degree()), (2, 2));
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.modulus_string(), "x^2+x+1");
        assert_eq!(make_field(6), Err(Error::NotPrimePower(6)));
        assert_eq!(make_field(1), Err(Error::NotPrimePower(1)));
        assert_eq!(make_field(12), Err(Error::NotPrimePower(12)));
    }

    #[test]
    fn irreducible_examples() {
        assert_eq!(find_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(find_irreducible(3, 1), vec![0, 1]);
        assert_eq!(find_irreducible(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(poly_string(&find_irreducible(2, 3)), "x^3+x+1");
    }

    #[test]
    fn irreducible_agrees_with_product_oracle() {
        for (p, k) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)] {
            let f = find_irreducible(p, k);
            assert!(!reducible_by_products(&f, p), "GF({p})^{k}: {f:?}");
            // every smaller candidate must be reducible
            let rank = f[..k as usize]
                .iter()
                .rev()
                .fold(0u64, |acc, &c| acc * u64::from(p) + u64::from(c));
            for m in 0..rank {
                assert!(reducible_by_products(&monic_from_index(m, k, p), p));
            }
        }
    }

    #[test]
    fn arithmetic_examples() {
        let f = make_field(5).unwrap();
        assert_eq!(f.inv(&f.element(2)).unwrap(), f.element(3));
        let f = make_field(4).unwrap();
        let x = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f.mul(&x, &x), f.from_coeffs(&[1, 1]).unwrap());
        assert_eq!(f.inv(&f.zero()), Err(Error::DivisionByZero));
        for a in f.elements() {
            assert!(f.add(&a, &f.neg(&a)).is_zero());
        }
    }

    #[test]
    fn deterministic_modulus() {
        assert_eq!(make_field(27).unwrap(), make_field(27).unwrap());
    }

    #[test]
    fn prime_powers() {
        let pp: Vec<u64> = (1..=32).filter(|&q| prime_power(q).is_some()).collect();
        assert_eq!(
            pp,
            vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]
        );
    }
}
