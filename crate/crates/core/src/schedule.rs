//! The exact polynomial size ladder f1..f8 and its big-integer evaluation.
//!
//! Guaranteed mode sizes every filter stage from this ladder; empirical mode
//! substitutes user budgets and relies on the verifier instead. All evaluation
//! is exact `BigUint` arithmetic; `f8(1)` is a number with roughly 33 million
//! decimal digits, so digit counting avoids full decimal conversion.

use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

/// f1(m) = 5m
pub fn f1(m: &BigUint) -> BigUint {
    m * 5u32
}

/// f2(m) = f1(f1(f1(m))) = 125m
pub fn f2(m: &BigUint) -> BigUint {
    m * 125u32
}

/// f3(m) = 32m^3 + 1
pub fn f3(m: &BigUint) -> BigUint {
    m * m * m * 32u32 + 1u32
}

/// f4(m) = f3(m) + m
pub fn f4(m: &BigUint) -> BigUint {
    f3(m) + m
}

/// f5(m) = f3(f4(m)) + m + f4(m)
pub fn f5(m: &BigUint) -> BigUint {
    let v4 = f4(m);
    f3(&v4) + m + v4
}

/// f6(m) = f5(f5(m))
pub fn f6(m: &BigUint) -> BigUint {
    f5(&f5(m))
}

/// f7(m) = f6(m) + 10m
pub fn f7(m: &BigUint) -> BigUint {
    f6(m) + m * 10u32
}

/// f8(m) = f2(f7(f7(f7(f7(m)))))
pub fn f8(m: &BigUint) -> BigUint {
    let mut v = m.clone();
    for _ in 0..4 {
        v = f7(&v);
    }
    f2(&v)
}

/// Evaluate f_i(m) for i in 1..=8.
pub fn eval(i: u8, m: &BigUint) -> BigUint {
    match i {
        1 => f1(m),
        2 => f2(m),
        3 => f3(m),
        4 => f4(m),
        5 => f5(m),
        6 => f6(m),
        7 => f7(m),
        8 => f8(m),
        _ => panic!("schedule index {i} out of range 1..=8"),
    }
}

pub fn eval_usize(i: u8, m: usize) -> BigUint {
    eval(i, &BigUint::from(m))
}

/// Degree of f_i as a polynomial in m.
pub fn degree(i: u8) -> u64 {
    match i {
        1 | 2 => 1,
        3 | 4 => 3,
        5 => 9,
        6 | 7 => 81,
        8 => 81u64.pow(4),
        _ => panic!("schedule index {i} out of range 1..=8"),
    }
}

/// Default cap on list sizes the library will actually materialize.
pub const REPRESENTABLE_CAP: u64 = 10_000_000;

/// Ladder rung as a concrete list size, or the honest refusal when the exact
/// value exceeds `cap`. The reported tier is the smallest oversized
/// intermediate inside the rung: for f6 that is the middle walk tier
/// f4(f5(m)), which already overflows any desk-scale budget at m = 1.
pub fn rung_size(i: u8, m: usize, cap: u64) -> Result<usize> {
    let value = eval_usize(i, m);
    if let Some(v) = value.to_u64() {
        if v <= cap {
            return Ok(v as usize);
        }
    }
    let (tier_name, tier) = first_oversized_tier(i, m, cap);
    Err(Error::GuaranteedModeInfeasible {
        m,
        rung: rung_name(i),
        value,
        tier_name,
        tier,
        cap,
    })
}

fn rung_name(i: u8) -> &'static str {
    ["f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8"][(i - 1) as usize]
}

/// Smallest intermediate list size inside rung i exceeding `cap`.
///
/// Rungs f1..f5 are evaluated directly; f6 = f5(f5(m)) passes through the
/// middle tier f4(f5(m)) first, and f7/f8 are larger still, so their first
/// oversized tier is the same one.
fn first_oversized_tier(i: u8, m: usize, cap: u64) -> (&'static str, BigUint) {
    let m = BigUint::from(m);
    let ladder: [(&'static str, BigUint); 6] = [
        ("f3(m)", f3(&m)),
        ("f4(m)", f4(&m)),
        ("f5(m)", f5(&m)),
        ("f4(f5(m))", f4(&f5(&m))),
        ("f6(m)", f6(&m)),
        ("f7(m)", f7(&m)),
    ];
    for (name, v) in ladder {
        if v.to_u64().map_or(true, |x| x > cap) {
            return (name, v);
        }
    }
    ("f8(m)", eval(i.max(8), &m))
}

/// Exact decimal digit count of a big integer, without decimal conversion.
///
/// Uses floor((bits-1)·log10 2) and floor(bits·log10 2) as bracketing
/// estimates; when they disagree the boundary power of ten is materialized
/// once and compared exactly.
pub fn decimal_digits(x: &BigUint) -> u64 {
    if x.is_one() || x.to_u64() == Some(0) {
        return 1;
    }
    let bits = x.bits();
    const LOG10_2: f64 = 0.30102999566398119521;
    let lo = (((bits - 1) as f64) * LOG10_2).floor() as u64;
    let hi = ((bits as f64) * LOG10_2).floor() as u64;
    if lo == hi {
        return lo + 1;
    }
    // x has lo+1 digits iff x < 10^hi; hi = lo+1 here.
    let boundary = BigUint::from(10u32).pow(hi as u32);
    if *x < boundary {
        lo + 1
    } else {
        hi + 1
    }
}

pub struct F8Report {
    pub digits: u64,
    /// f8(1) < 10^(4·10^7), equivalent to digits <= 4·10^7.
    pub below_abstract_bound: bool,
}

/// Evaluate f8(1) exactly and report its decimal digit count.
pub fn f8_digit_count() -> F8Report {
    let v = f8(&BigUint::one());
    let digits = decimal_digits(&v);
    F8Report {
        digits,
        below_abstract_bound: digits <= 40_000_000,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn small_values_match_formulas() {
        // Fixed points of the ladder, independently recomputed.
        for m in 1u64..=5 {
            assert_eq!(f1(&big(m)), big(5 * m));
            assert_eq!(f2(&big(m)), big(125 * m));
            assert_eq!(f3(&big(m)), big(32 * m * m * m + 1));
            assert_eq!(f4(&big(m)), big(32 * m * m * m + m + 1));
        }
        assert_eq!(f5(&big(1)), big(1_257_764));
        assert_eq!(f5(&big(2)), big(555_967_590));
        assert_eq!(f5(&big(3)), big(20_927_105_896));
        assert_eq!(f5(&big(4)), big(276_896_094_122));
        assert_eq!(f5(&big(5)), big(2_057_229_834_924));
    }

    #[test]
    fn f6_matches_composition() {
        for m in 1u64..=3 {
            let direct = f6(&big(m));
            let composed = f5(&f5(&big(m)));
            assert_eq!(direct, composed);
        }
        assert_eq!(
            f6(&big(1)).to_string(),
            "8260234071386630434499949211538302790815017853553833554363882"
        );
        assert_eq!(
            f4(&f5(&big(1))),
            BigUint::from(63_671_848_539_891_169_573u128)
        );
    }

    #[test]
    fn degrees() {
        assert_eq!(degree(2), 1);
        assert_eq!(degree(5), 9);
        assert_eq!(degree(6), 81);
        assert_eq!(degree(8), 43_046_721);
        assert_eq!(degree(8), 3u64.pow(16));
    }

    #[test]
    fn monotone_in_m() {
        for i in 1..=7u8 {
            let mut prev = eval(i, &big(1));
            for m in 2u64..=6 {
                let cur = eval(i, &big(m));
                assert!(cur > prev, "f{i} not strictly monotone at m={m}");
                prev = cur;
            }
        }
    }

    #[test]
    fn decimal_digit_counting_is_exact() {
        assert_eq!(decimal_digits(&big(1)), 1);
        assert_eq!(decimal_digits(&big(9)), 1);
        assert_eq!(decimal_digits(&big(10)), 2);
        assert_eq!(decimal_digits(&big(999_999)), 6);
        assert_eq!(decimal_digits(&big(1_000_000)), 7);
        let p = BigUint::from(10u32).pow(100);
        assert_eq!(decimal_digits(&p), 101);
        assert_eq!(decimal_digits(&(&p - 1u32)), 100);
        assert_eq!(decimal_digits(&(&p + 1u32)), 101);
    }

    #[test]
    fn rung_sizes_and_refusal() {
        assert_eq!(rung_size(3, 1, REPRESENTABLE_CAP).unwrap(), 33);
        assert_eq!(rung_size(5, 1, REPRESENTABLE_CAP).unwrap(), 1_257_764);
        let err = rung_size(6, 1, REPRESENTABLE_CAP).unwrap_err();
        match err {
            Error::GuaranteedModeInfeasible {
                rung, value, tier, ..
            } => {
                assert_eq!(rung, "f6");
                assert_eq!(decimal_digits(&value), 61);
                // The first oversized tier inside the f6 stage.
                assert_eq!(tier, BigUint::from(63_671_848_539_891_169_573u128));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }
}
