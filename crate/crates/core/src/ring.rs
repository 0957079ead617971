//! Finite commutative coefficient rings with unity: Z/n for 2 <= n <= 9
//! and the fields F4, F8, F9 built from fixed irreducible polynomials.
//!
//! Field element encoding (used everywhere literals appear, including the
//! involution-spec text format and JSON reports): an element is the integer
//! whose base-p digits are the polynomial coefficients, constant term
//! first. So F4 = {0, 1, x = 2, x+1 = 3} with x^2 + x + 1 = 0;
//! F8 uses x^3 + x + 1; F9 uses x^2 + 1.

use crate::error::{Error, Result};

pub const RING_LABELS: [&str; 11] = [
    "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "F4", "F8", "F9",
];

/// A finite commutative ring with unity, stored as explicit add/mul tables.
#[derive(Clone, Debug)]
pub struct CoeffRing {
    label: String,
    size: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    inv: Vec<Option<usize>>,
    units: Vec<usize>,
    characteristic: usize,
    zero: usize,
    one: usize,
}

impl CoeffRing {
    /// Builds and fully validates a ring from raw tables.
    pub fn from_tables(
        label: &str,
        size: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> Result<CoeffRing> {
        if size == 0 || add.len() != size * size || mul.len() != size * size {
            return Err(Error::input("ring tables have wrong dimensions"));
        }
        let idx = |x: usize, y: usize| x * size + y;
        for (pos, &v) in add.iter().chain(mul.iter()).enumerate() {
            if v >= size {
                return Err(Error::input(format!("ring table entry {pos} out of range")));
            }
        }
        // (elements, add) abelian group with identity `zero`.
        for x in 0..size {
            if add[idx(zero, x)] != x || add[idx(x, zero)] != x {
                return Err(Error::input("additive identity fails"));
            }
            for y in 0..size {
                if add[idx(x, y)] != add[idx(y, x)] {
                    return Err(Error::input("addition is not commutative"));
                }
                for z in 0..size {
                    if add[idx(add[idx(x, y)], z)] != add[idx(x, add[idx(y, z)])] {
                        return Err(Error::input("addition is not associative"));
                    }
                }
            }
        }
        let mut neg = vec![usize::MAX; size];
        for x in 0..size {
            let n = (0..size)
                .find(|&y| add[idx(x, y)] == zero)
                .ok_or_else(|| Error::input(format!("element {x} has no additive inverse")))?;
            neg[x] = n;
        }
        // Multiplication: associative, commutative, unital, distributive.
        for x in 0..size {
            if mul[idx(one, x)] != x || mul[idx(x, one)] != x {
                return Err(Error::input("multiplicative identity fails"));
            }
            for y in 0..size {
                if mul[idx(x, y)] != mul[idx(y, x)] {
                    return Err(Error::input("multiplication is not commutative"));
                }
                for z in 0..size {
                    if mul[idx(mul[idx(x, y)], z)] != mul[idx(x, mul[idx(y, z)])] {
                        return Err(Error::input("multiplication is not associative"));
                    }
                    if mul[idx(x, add[idx(y, z)])] != add[idx(mul[idx(x, y)], mul[idx(x, z)])] {
                        return Err(Error::input("distributivity fails"));
                    }
                }
            }
        }
        let mut inv = vec![None; size];
        let mut units = Vec::new();
        for x in 0..size {
            if let Some(y) = (0..size).find(|&y| mul[idx(x, y)] == one) {
                inv[x] = Some(y);
                units.push(x);
            }
        }
        // Characteristic = additive order of one.
        let mut characteristic = 1;
        let mut acc = one;
        while acc != zero {
            acc = add[idx(acc, one)];
            characteristic += 1;
        }
        Ok(CoeffRing {
            label: label.to_string(),
            size,
            add,
            mul,
            neg,
            inv,
            units,
            characteristic,
            zero,
            one,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn characteristic(&self) -> usize {
        self.characteristic
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.size + y]
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.size + y]
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg[y])
    }

    pub fn inv(&self, x: usize) -> Option<usize> {
        self.inv[x]
    }

    pub fn is_unit(&self, x: usize) -> bool {
        self.inv[x].is_some()
    }

    pub fn units(&self) -> &[usize] {
        &self.units
    }

    pub fn neg_one(&self) -> usize {
        self.neg[self.one]
    }

    /// Whether -1 = 1, i.e. the characteristic is 2.
    pub fn is_minus_one_equal_one(&self) -> bool {
        self.characteristic == 2
    }

    pub fn is_field(&self) -> bool {
        self.units.len() == self.size - 1
    }

    /// Multiplicative order of a unit.
    pub fn unit_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut n = 1;
        while acc != self.one {
            acc = self.mul(acc, x);
            n += 1;
        }
        n
    }

    pub fn pow(&self, x: usize, mut e: usize) -> usize {
        let mut base = x;
        let mut acc = self.one;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Primes dividing the characteristic (used by the group-ring unit
    /// detection to reduce invertibility to residue fields).
    pub fn char_primes(&self) -> Vec<usize> {
        let mut n = self.characteristic;
        let mut out = Vec::new();
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                out.push(p);
                while n.is_multiple_of(p) {
                    n /= p;
                }
            }
            p += 1;
        }
        if n > 1 {
            out.push(n);
        }
        out
    }

    pub fn parse_element(&self, tok: &str) -> Result<usize> {
        let v: usize = tok
            .parse()
            .map_err(|_| Error::input(format!("bad ring element literal {tok:?}")))?;
        if v >= self.size {
            return Err(Error::input(format!(
                "ring element {v} out of range for {} (size {})",
                self.label, self.size
            )));
        }
        Ok(v)
    }
}

fn modular_ring(n: usize) -> Result<CoeffRing> {
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            add.push((x + y) % n);
            mul.push((x * y) % n);
        }
    }
    CoeffRing::from_tables(&format!("Z{n}"), n, add, mul, 0, 1)
}

/// GF(p^k) with the given irreducible polynomial (coefficients of
/// x^0..x^{k-1} of the reduction rule x^k = poly).
fn galois_field(label: &str, p: usize, k: usize, reduction: &[usize]) -> Result<CoeffRing> {
    let size = p.pow(k as u32);
    let to_digits = |mut v: usize| -> Vec<usize> {
        (0..k)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    };
    let from_digits = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    for x in 0..size {
        let dx = to_digits(x);
        for y in 0..size {
            let dy = to_digits(y);
            let sum: Vec<usize> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % p).collect();
            add.push(from_digits(&sum));
            // Polynomial product then reduction by x^k = reduction.
            let mut prod = vec![0usize; 2 * k - 1];
            for (i, &a) in dx.iter().enumerate() {
                for (j, &b) in dy.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + a * b) % p;
                }
            }
            for i in (k..2 * k - 1).rev() {
                let c = prod[i];
                if c != 0 {
                    prod[i] = 0;
                    for (j, &r) in reduction.iter().enumerate() {
                        prod[i - k + j] = (prod[i - k + j] + c * r) % p;
                    }
                }
            }
            mul.push(from_digits(&prod[..k]));
        }
    }
    CoeffRing::from_tables(label, size, add, mul, 0, 1)
}

/// Builds a ring from its label. Prime-field aliases F2, F3, F5, F7 are
/// accepted for Z2, Z3, Z5, Z7.
pub fn make_ring(label: &str) -> Result<CoeffRing> {
    match label {
        "Z2" | "F2" => modular_ring(2),
        "Z3" | "F3" => modular_ring(3),
        "Z4" => modular_ring(4),
        "Z5" | "F5" => modular_ring(5),
        "Z6" => modular_ring(6),
        "Z7" | "F7" => modular_ring(7),
        "Z8" => modular_ring(8),
        "Z9" => modular_ring(9),
        // x^2 = x + 1
        "F4" => galois_field("F4", 2, 2, &[1, 1]),
        // x^3 = x + 1
        "F8" => galois_field("F8", 2, 3, &[1, 1, 0]),
        // x^2 = -1 = 2
        "F9" => galois_field("F9", 3, 2, &[2, 0]),
        _ => Err(Error::input(format!("unknown ring label {label:?}"))),
    }
}
