//! Constructors for standard families of small groups.

use crate::error::{Error, Result};
use crate::group::Group;

/// `Z_n` with `i * j = (i + j) mod n`. Labels are `0..n`.
pub fn cyclic_group(n: usize) -> Group {
    assert!(n >= 1, "cyclic group needs n >= 1");
    let table = (0..n).flat_map(|i| (0..n).map(move |j| (i + j) % n)).collect();
    Group::from_flat((0..n).map(|i| i.to_string()).collect(), table).expect("Z_n is a group")
}

/// Dihedral group of order `2n`: `r^n = s^2 = e`, `s r s = r^-1`.
///
/// Index `i < n` is `r^i`, index `n + i` is `s r^i`.
pub fn dihedral_group(n: usize) -> Group {
    assert!(n >= 3, "dihedral group needs n >= 3");
    let elements: Vec<(bool, usize)> = (0..n).map(|i| (false, i)).chain((0..n).map(|i| (true, i))).collect();
    // r^a s = s r^-a
    let op = |&(fa, a): &(bool, usize), &(fb, b): &(bool, usize)| {
        if fb {
            (!fa, (b + n - a) % n)
        } else {
            (fa, (a + b) % n)
        }
    };
    let label = |&(f, i): &(bool, usize)| if f { format!("sr{i}") } else { format!("r{i}") };
    Group::from_operation(&elements, op, label).expect("dihedral presentation is a group")
}

/// Componentwise product. Element `(i, j)` has index `i * |h| + j`.
pub fn direct_product(g: &Group, h: &Group) -> Group {
    let (m, n) = (g.order(), h.order());
    let mut table = Vec::with_capacity(m * n * m * n);
    for a in 0..m * n {
        for b in 0..m * n {
            let (ga, ha) = (a / n, a % n);
            let (gb, hb) = (b / n, b % n);
            table.push(g.op(ga, gb) * n + h.op(ha, hb));
        }
    }
    let labels = (0..m * n)
        .map(|a| format!("({},{})", g.label(a / n), h.label(a % n)))
        .collect();
    Group::from_flat(labels, table).expect("product of groups is a group")
}

/// `Z_n ⋊ Z_m` where the generator of `Z_m` acts on `Z_n` by multiplication
/// with `r`. Requires `gcd(r, n) = 1` and `r^m = 1 mod n`.
pub fn semidirect_cyclic(n: usize, m: usize, r: usize) -> Result<Group> {
    if n == 0 || m == 0 {
        return Err(Error::Precondition("factors must be nontrivial".into()));
    }
    let pow = |k: usize| (0..k).fold(1 % n, |acc, _| acc * r % n);
    if pow(m) != 1 % n || gcd(r % n, n) != 1 {
        return Err(Error::Precondition(format!(
            "{r} does not define an action of Z_{m} on Z_{n}"
        )));
    }
    let elements: Vec<(usize, usize)> = (0..m).flat_map(|b| (0..n).map(move |a| (a, b))).collect();
    let op = |&(a1, b1): &(usize, usize), &(a2, b2): &(usize, usize)| ((a1 + pow(b1) * a2) % n, (b1 + b2) % m);
    Group::from_operation(&elements, op, |&(a, b)| format!("a{a}b{b}"))
}

/// The quaternion group `{±1, ±i, ±j, ±k}`.
pub fn quaternion_group() -> Group {
    // (sign, unit) with unit 0 = 1, 1 = i, 2 = j, 3 = k.
    let elements: Vec<(bool, u8)> = [false, true]
        .into_iter()
        .flat_map(|s| (0..4u8).map(move |u| (s, u)))
        .collect();
    let unit_mul = |a: u8, b: u8| -> (bool, u8) {
        match (a, b) {
            (0, x) | (x, 0) => (false, x),
            (x, y) if x == y => (true, 0),
            (1, 2) => (false, 3),
            (2, 1) => (true, 3),
            (2, 3) => (false, 1),
            (3, 2) => (true, 1),
            (3, 1) => (false, 2),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    };
    let op = |&(sa, a): &(bool, u8), &(sb, b): &(bool, u8)| {
        let (s, u) = unit_mul(a, b);
        (sa ^ sb ^ s, u)
    };
    let label = |&(s, u): &(bool, u8)| format!("{}{}", if s { "-" } else { "+" }, ["1", "i", "j", "k"][u as usize]);
    Group::from_operation(&elements, op, label).expect("quaternions form a group")
}

/// The affine group `x -> a x + b` over the field with `q` elements
/// (`a != 0`), of order `q (q - 1)`. Supports prime `q` and `q` in {4, 8}.
pub fn affine_group(q: usize) -> Result<Group> {
    let field = SmallField::new(q)?;
    let elements: Vec<(usize, usize)> = (1..q).flat_map(|a| (0..q).map(move |b| (a, b))).collect();
    // (a1, b1) after (a2, b2): x -> a1 (a2 x + b2) + b1
    let op = |&(a1, b1): &(usize, usize), &(a2, b2): &(usize, usize)| {
        (field.mul(a1, a2), field.add(field.mul(a1, b2), b1))
    };
    Group::from_operation(&elements, op, |&(a, b)| format!("x{a}+{b}"))
}

struct SmallField {
    q: usize,
    // Irreducible polynomial for characteristic 2, or 0 for prime fields.
    modulus: usize,
}

impl SmallField {
    fn new(q: usize) -> Result<SmallField> {
        let modulus = match q {
            4 => 0b111,
            8 => 0b1011,
            _ if crate::arith::is_prime(q) => 0,
            _ => return Err(Error::Precondition(format!("unsupported field size {q}"))),
        };
        Ok(SmallField { q, modulus })
    }

    fn add(&self, a: usize, b: usize) -> usize {
        if self.modulus == 0 {
            (a + b) % self.q
        } else {
            a ^ b
        }
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        if self.modulus == 0 {
            return a * b % self.q;
        }
        let mut product = 0;
        let mut a = a;
        let mut b = b;
        while b > 0 {
            if b & 1 == 1 {
                product ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & self.q != 0 {
                a ^= self.modulus;
            }
        }
        product
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
