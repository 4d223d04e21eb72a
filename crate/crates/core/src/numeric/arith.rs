//! Widening modular arithmetic.
//!
//! Operands are reduced first and multiplied in `u128`, which is exact for any
//! modulus that fits in 64 bits. Larger moduli fall back to `BigUint`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

pub fn gcd(a: u128, b: u128) -> u128 {
    a.gcd(&b)
}

pub fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    debug_assert!(m > 0);
    let (a, b) = (a % m, b % m);
    if m <= u64::MAX as u128 {
        a * b % m
    } else {
        let p = BigUint::from(a) * BigUint::from(b) % BigUint::from(m);
        p.to_u128().expect("residue is below a u128 modulus")
    }
}

pub fn pow_mod(base: u128, mut exp: u32, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u128;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    acc
}

/// `-a mod m` in `[0, m)`.
pub fn neg_mod(a: u128, m: u128) -> u128 {
    let r = a % m;
    if r == 0 {
        0
    } else {
        m - r
    }
}
