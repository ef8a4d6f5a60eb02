//! The one-sided binary shift space, restricted to eventually periodic
//! words. That subset is dense, shift-invariant, contains every periodic
//! point, and admits exact metric evaluation, which is all the
//! constructions here need.
//!
//! Words are encoded `"pre:cycle"` in text form: `"0001:01"` is the string
//! 0001 010101..., `":0"` is 0^inf.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::rational::{pow2, pow2_inv, Rational};

pub type Bit = u8;

/// Eventually periodic binary word in canonical form: the cycle is
/// primitive and the last preperiod bit differs from the last cycle bit.
/// Structural equality on canonical forms is equality of infinite strings.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EPWord {
    preperiod: Vec<Bit>,
    cycle: Vec<Bit>,
}

fn check_bits(bits: &[Bit]) -> Result<()> {
    if bits.iter().any(|&b| b > 1) {
        return Err(Error::InvalidInput("bits must be 0 or 1".into()));
    }
    Ok(())
}

/// Shortest d dividing |cycle| such that the cycle is the first d bits
/// repeated.
fn primitive_root_len(cycle: &[Bit]) -> usize {
    let n = cycle.len();
    for d in 1..=n {
        if n % d == 0 && cycle.iter().enumerate().all(|(i, &b)| b == cycle[i % d]) {
            return d;
        }
    }
    n
}

impl EPWord {
    /// Canonicalizing constructor; the only way to build a word.
    pub fn new(preperiod: Vec<Bit>, cycle: Vec<Bit>) -> Result<EPWord> {
        if cycle.is_empty() {
            return Err(Error::InvalidInput("cycle must be nonempty".into()));
        }
        check_bits(&preperiod)?;
        check_bits(&cycle)?;
        let mut pre = preperiod;
        let root = primitive_root_len(&cycle);
        let mut cyc = cycle[..root].to_vec();
        // absorb preperiod bits that already follow the cycle pattern
        while let Some(&last) = pre.last() {
            if last == *cyc.last().unwrap() {
                pre.pop();
                cyc.rotate_right(1);
            } else {
                break;
            }
        }
        Ok(EPWord {
            preperiod: pre,
            cycle: cyc,
        })
    }

    pub fn zeros() -> EPWord {
        EPWord {
            preperiod: Vec::new(),
            cycle: vec![0],
        }
    }

    pub fn ones() -> EPWord {
        EPWord {
            preperiod: Vec::new(),
            cycle: vec![1],
        }
    }

    pub fn preperiod(&self) -> &[Bit] {
        &self.preperiod
    }

    pub fn cycle(&self) -> &[Bit] {
        &self.cycle
    }

    pub fn bit(&self, i: usize) -> Bit {
        if i < self.preperiod.len() {
            self.preperiod[i]
        } else {
            self.cycle[(i - self.preperiod.len()) % self.cycle.len()]
        }
    }

    pub fn prefix(&self, n: usize) -> Vec<Bit> {
        (0..n).map(|i| self.bit(i)).collect()
    }

    /// One application of the shift map: drop the first bit.
    pub fn shift(&self) -> EPWord {
        self.shift_n(1)
    }

    /// n applications of the shift map.
    pub fn shift_n(&self, n: usize) -> EPWord {
        if n <= self.preperiod.len() {
            EPWord::new(self.preperiod[n..].to_vec(), self.cycle.clone()).unwrap()
        } else {
            let mut cyc = self.cycle.clone();
            cyc.rotate_left((n - self.preperiod.len()) % self.cycle.len());
            EPWord::new(Vec::new(), cyc).unwrap()
        }
    }

    /// The purely periodic word repeating the first n bits; agrees with
    /// self on the first n coordinates, so the metric gap is at most
    /// 2^(1-n).
    pub fn truncate_to_periodic(&self, n: usize) -> Result<EPWord> {
        if n == 0 {
            return Err(Error::InvalidInput(
                "truncation length must be at least 1".into(),
            ));
        }
        EPWord::new(Vec::new(), self.prefix(n))
    }

    /// Least period when the word is purely periodic, None otherwise.
    pub fn period(&self) -> Option<usize> {
        if self.preperiod.is_empty() {
            Some(self.cycle.len())
        } else {
            None
        }
    }

    pub fn parse(s: &str) -> Result<EPWord> {
        let (pre, cyc) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("word {s:?} must be \"pre:cycle\"")))?;
        let to_bits = |part: &str| -> Result<Vec<Bit>> {
            part.chars()
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    _ => Err(Error::Parse(format!("bad bit {c:?} in word {s:?}"))),
                })
                .collect()
        };
        EPWord::new(to_bits(pre)?, to_bits(cyc)?)
    }
}

impl fmt::Display for EPWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.preperiod {
            write!(f, "{b}")?;
        }
        write!(f, ":")?;
        for &b in &self.cycle {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// d(a,b) = sum_i D(a_i, b_i) / 2^i, evaluated exactly: a finite sum over
/// the aligned preperiods plus a closed-form geometric tail over the
/// lcm-aligned common cycle. Result lies in [0, 2].
pub fn metric(a: &EPWord, b: &EPWord) -> Rational {
    let head = a.preperiod.len().max(b.preperiod.len());
    let tail_period = a.cycle.len().lcm(&b.cycle.len());

    let mut head_sum = Rational::from_integer(0.into());
    for i in 0..head {
        if a.bit(i) != b.bit(i) {
            head_sum += pow2_inv(i as u32);
        }
    }

    let mut cycle_sum = Rational::from_integer(0.into());
    for j in 0..tail_period {
        if a.bit(head + j) != b.bit(head + j) {
            cycle_sum += pow2_inv(j as u32);
        }
    }
    let p = pow2(tail_period as u32);
    let tail = pow2_inv(head as u32) * cycle_sum * &p / (&p - Rational::from_integer(1.into()));
    head_sum + tail
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use num_traits::Zero;

    fn w(s: &str) -> EPWord {
        EPWord::parse(s).unwrap()
    }

    #[test]
    fn canonicalization() {
        assert_eq!(EPWord::new(vec![0], vec![0]).unwrap(), w(":0"));
        assert_eq!(EPWord::new(vec![], vec![0, 1, 0, 1]).unwrap(), w(":01"));
        assert_eq!(
            EPWord::new(vec![1, 0], vec![0]).unwrap(),
            EPWord::new(vec![1], vec![0]).unwrap()
        );
        assert!(EPWord::new(vec![], vec![]).is_err());
        assert!(EPWord::new(vec![2], vec![0]).is_err());
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let v = w("0010:0110");
        let again = EPWord::new(v.preperiod().to_vec(), v.cycle().to_vec()).unwrap();
        assert_eq!(v, again);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(w("1:0").shift(), w(":0"));
        assert_eq!(w(":01").shift(), w(":10"));
        assert_eq!(w(":0").shift(), w(":0"));
    }

    #[test]
    fn shift_n_matches_repeated_shift() {
        let v = w("1101:0010");
        let mut cur = v.clone();
        for n in 0..12 {
            assert_eq!(v.shift_n(n), cur, "mismatch at n={n}");
            cur = cur.shift();
        }
    }

    #[test]
    fn metric_examples() {
        assert!(metric(&w(":0"), &w(":0")).is_zero());
        assert_eq!(metric(&w(":0"), &w(":1")), int(2));
        // d(0^inf, (0001)^inf) = 2^-3 / (1 - 2^-4)
        assert_eq!(metric(&w(":0"), &w(":0001")), rat(2, 15));
    }

    #[test]
    fn metric_brute_force_partial_sum() {
        // 200-term partial sum brackets the exact series value
        let a = w(":0");
        let b = w(":0001");
        let mut partial = int(0);
        for i in 0..200u32 {
            if a.bit(i as usize) != b.bit(i as usize) {
                partial += pow2_inv(i);
            }
        }
        let exact = metric(&a, &b);
        assert!(partial <= exact);
        assert!(&exact - &partial < pow2_inv(190));
    }

    #[test]
    fn truncate_examples() {
        let v = EPWord::new(vec![0, 0, 0, 0], vec![1]).unwrap();
        assert_eq!(v.truncate_to_periodic(8).unwrap(), w(":00001111"));
        assert_eq!(w(":0").truncate_to_periodic(3).unwrap(), w(":0"));
        let v = EPWord::new(vec![1], vec![0]).unwrap();
        let t = v.truncate_to_periodic(2).unwrap();
        assert_eq!(t, w(":10"));
        // exact gap: bits differ at even indices >= 2
        assert_eq!(metric(&v, &t), rat(1, 3));
        assert!(metric(&v, &t) <= pow2_inv(1));
        assert!(v.truncate_to_periodic(0).is_err());
    }

    #[test]
    fn period_examples() {
        assert_eq!(w(":01").period(), Some(2));
        assert_eq!(EPWord::new(vec![1], vec![0]).unwrap().period(), None);
        let v = w(":001");
        assert_eq!(v.period(), Some(3));
        assert_ne!(v.shift_n(1), v);
        assert_ne!(v.shift_n(2), v);
        assert_eq!(v.shift_n(3), v);
    }

    #[test]
    fn display_roundtrip() {
        for s in [":0", ":01", "0001:01", "1:0"] {
            let v = w(s);
            assert_eq!(EPWord::parse(&v.to_string()).unwrap(), v);
        }
    }
}
