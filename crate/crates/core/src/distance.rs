//! Minimum Lee distance of linear codes over `Z4` by exhaustive enumeration.
//!
//! Codewords are visited in reflected mixed-radix Gray order over the Howell
//! basis coefficients, so consecutive codewords differ by adding or
//! subtracting one basis row. Vectors are bit-sliced (low and high bit
//! planes), making each step a handful of word operations plus two popcounts.
//!
//! The coefficient space is split into independent tasks over the leading
//! basis rows; callers with threads may run tasks concurrently and take the
//! minimum, which is independent of the partitioning.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::linalg::Z4Code;
use crate::ring::Z4;

/// Minimum Lee distance of a code, or what is known about it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Distance {
    Exact(u32),
    /// The zero code.
    Infinite,
    /// Not enumerated; the smallest weight seen is an upper bound.
    UpperBound(u32),
}

impl Distance {
    pub fn value(self) -> Option<u32> {
        match self {
            Distance::Exact(d) | Distance::UpperBound(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_exact(self) -> bool {
        !matches!(self, Distance::UpperBound(_))
    }
}

/// `(n, 4^k1 2^k2, d_Lee)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CodeParams {
    pub length: usize,
    pub k1: usize,
    pub k2: usize,
    pub d_lee: Distance,
}

impl CodeParams {
    pub fn log2_size(&self) -> u32 {
        (2 * self.k1 + self.k2) as u32
    }

    /// Same size and an exactly equal distance.
    pub fn matches(&self, length: usize, k1: usize, k2: usize, d: u32) -> bool {
        self.length == length && self.k1 == k1 && self.k2 == k2 && self.d_lee == Distance::Exact(d)
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, 4^{}", self.length, self.k1)?;
        if self.k2 > 0 {
            write!(f, " 2^{}", self.k2)?;
        }
        match self.d_lee {
            Distance::Exact(d) => write!(f, ", {d})"),
            Distance::Infinite => f.write_str(", inf)"),
            Distance::UpperBound(d) => write!(f, ", <={d})"),
        }
    }
}

trait Lanes: Clone {
    fn zero(words: usize) -> Self;
    fn set(&mut self, pos: usize, v: Z4);
    fn add_assign(&mut self, rhs: &Self);
    fn weight(&self) -> u32;
}

#[derive(Clone, Copy)]
struct Fixed<const W: usize> {
    lo: [u64; W],
    hi: [u64; W],
}

impl<const W: usize> Lanes for Fixed<W> {
    fn zero(_: usize) -> Self {
        Fixed {
            lo: [0; W],
            hi: [0; W],
        }
    }

    fn set(&mut self, pos: usize, v: Z4) {
        let (w, b) = (pos / 64, pos % 64);
        self.lo[w] = (self.lo[w] & !(1 << b)) | (((v.value() & 1) as u64) << b);
        self.hi[w] = (self.hi[w] & !(1 << b)) | (((v.value() >> 1) as u64) << b);
    }

    #[inline(always)]
    fn add_assign(&mut self, rhs: &Self) {
        for i in 0..W {
            let carry = self.lo[i] & rhs.lo[i];
            self.lo[i] ^= rhs.lo[i];
            self.hi[i] ^= rhs.hi[i] ^ carry;
        }
    }

    #[inline(always)]
    fn weight(&self) -> u32 {
        let mut w = 0;
        for i in 0..W {
            w += self.lo[i].count_ones() + 2 * (self.hi[i] & !self.lo[i]).count_ones();
        }
        w
    }
}

#[derive(Clone)]
struct Dyn {
    lo: Vec<u64>,
    hi: Vec<u64>,
}

impl Lanes for Dyn {
    fn zero(words: usize) -> Self {
        Dyn {
            lo: vec![0; words],
            hi: vec![0; words],
        }
    }

    fn set(&mut self, pos: usize, v: Z4) {
        let (w, b) = (pos / 64, pos % 64);
        self.lo[w] = (self.lo[w] & !(1 << b)) | (((v.value() & 1) as u64) << b);
        self.hi[w] = (self.hi[w] & !(1 << b)) | (((v.value() >> 1) as u64) << b);
    }

    fn add_assign(&mut self, rhs: &Self) {
        for i in 0..self.lo.len() {
            let carry = self.lo[i] & rhs.lo[i];
            self.lo[i] ^= rhs.lo[i];
            self.hi[i] ^= rhs.hi[i] ^ carry;
        }
    }

    fn weight(&self) -> u32 {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(&l, &h)| l.count_ones() + 2 * (h & !l).count_ones())
            .sum()
    }
}

fn pack<L: Lanes>(v: &[Z4], words: usize) -> L {
    let mut out = L::zero(words);
    for (i, &x) in v.iter().enumerate() {
        out.set(i, x);
    }
    out
}

/// Lee weight of a vector over `Z4`.
pub fn lee_weight(v: &[Z4]) -> u32 {
    v.iter().map(|x| x.lee_weight()).sum()
}

/// A prepared exhaustive scan over the nonzero codewords of a code.
#[derive(Clone, Debug)]
pub struct DistanceScan {
    length: usize,
    basis: Vec<Vec<Z4>>,
    radices: Vec<u8>,
    /// Leading basis rows fixed per task.
    prefix: usize,
    tasks: u64,
}

const TARGET_TASKS: u64 = 256;

impl DistanceScan {
    pub fn new(code: &Z4Code) -> DistanceScan {
        let radices = code.radices();
        let mut prefix = 0;
        let mut tasks = 1u64;
        while prefix + 1 < radices.len() && tasks < TARGET_TASKS {
            tasks *= radices[prefix] as u64;
            prefix += 1;
        }
        DistanceScan {
            length: code.length(),
            basis: code.basis().to_vec(),
            radices,
            prefix,
            tasks,
        }
    }

    pub fn task_count(&self) -> u64 {
        self.tasks
    }

    /// Total number of codewords, zero included.
    pub fn codeword_count(&self) -> u128 {
        self.radices.iter().map(|&r| r as u128).product()
    }

    /// Smallest Lee weight among the nonzero codewords of one task, or `None`
    /// if the task holds only the zero word.
    pub fn scan_task(&self, task: u64) -> Option<u32> {
        let words = self.length.div_ceil(64).max(1);
        match words {
            1 => self.run::<Fixed<1>>(task, words, u64::MAX),
            2 => self.run::<Fixed<2>>(task, words, u64::MAX),
            3 | 4 => self.run::<Fixed<4>>(task, words, u64::MAX),
            5..=8 => self.run::<Fixed<8>>(task, words, u64::MAX),
            _ => self.run::<Dyn>(task, words, u64::MAX),
        }
        .0
    }

    /// Scans at most `limit` codewords of one task; returns the best weight
    /// seen and the number of codewords visited.
    pub fn scan_task_partial(&self, task: u64, limit: u64) -> (Option<u32>, u64) {
        let words = self.length.div_ceil(64).max(1);
        self.run::<Dyn>(task, words, limit)
    }

    fn run<L: Lanes>(&self, task: u64, words: usize, limit: u64) -> (Option<u32>, u64) {
        let gens: Vec<L> = self.basis.iter().map(|r| pack(r, words)).collect();
        let negs: Vec<L> = self
            .basis
            .iter()
            .map(|r| {
                let neg: Vec<Z4> = r.iter().map(|&x| -x).collect();
                pack(&neg, words)
            })
            .collect();
        // fixed prefix digits, first row least significant within the task index
        let mut cur = L::zero(words);
        let mut t = task;
        for (&r, gen) in self.radices[..self.prefix].iter().zip(&gens) {
            let r = r as u64;
            for _ in 0..(t % r) {
                cur.add_assign(gen);
            }
            t /= r;
        }
        let suffix = &self.radices[self.prefix..];
        let sgens = &gens[self.prefix..];
        let snegs = &negs[self.prefix..];
        let mut best = u32::MAX;
        let start = cur.weight();
        if start > 0 {
            best = start;
        }
        let mut visited = 1u64;
        let mut digits = vec![0u8; suffix.len()];
        let mut up = vec![true; suffix.len()];
        'outer: loop {
            if visited >= limit || best == 1 {
                break;
            }
            let mut j = 0;
            loop {
                if j == suffix.len() {
                    break 'outer;
                }
                if up[j] && digits[j] + 1 < suffix[j] {
                    digits[j] += 1;
                    cur.add_assign(&sgens[j]);
                    break;
                }
                if !up[j] && digits[j] > 0 {
                    digits[j] -= 1;
                    cur.add_assign(&snegs[j]);
                    break;
                }
                up[j] = !up[j];
                j += 1;
            }
            visited += 1;
            best = best.min(cur.weight());
        }
        ((best != u32::MAX).then_some(best), visited)
    }

    /// Runs every task sequentially.
    pub fn run_all(&self) -> Option<u32> {
        (0..self.tasks).filter_map(|t| self.scan_task(t)).min()
    }
}

/// Smallest Lee weight among the basis rows, an upper bound on the distance.
pub fn basis_weight_bound(code: &Z4Code) -> Option<u32> {
    code.basis().iter().map(|r| lee_weight(r)).min()
}

/// Exact minimum Lee distance when `|C| - 1 <= budget`.
pub fn min_lee_distance(code: &Z4Code, budget: u64) -> Result<CodeParams, Error> {
    let d_lee = if code.is_zero() {
        Distance::Infinite
    } else {
        check_budget(code, budget)?;
        Distance::Exact(DistanceScan::new(code).run_all().expect("nonzero code"))
    };
    Ok(params_with(code, d_lee))
}

/// Fails with [`Error::BudgetExceeded`] (carrying the basis-row upper bound)
/// when the nonzero codewords outnumber `budget`.
pub fn check_budget(code: &Z4Code, budget: u64) -> Result<(), Error> {
    let log2 = code.log2_size();
    let nonzero = if log2 >= 64 {
        u64::MAX
    } else {
        (1u64 << log2) - 1
    };
    if log2 >= 64 || nonzero > budget {
        return Err(Error::BudgetExceeded {
            log2_size: log2,
            budget,
            upper_bound: basis_weight_bound(code),
        });
    }
    Ok(())
}

/// Parameters with the distance left as the basis-row upper bound.
pub fn bounded_params(code: &Z4Code) -> CodeParams {
    let d = match basis_weight_bound(code) {
        Some(w) => Distance::UpperBound(w),
        None => Distance::Infinite,
    };
    params_with(code, d)
}

pub fn params_with(code: &Z4Code, d_lee: Distance) -> CodeParams {
    CodeParams {
        length: code.length(),
        k1: code.k1(),
        k2: code.k2(),
        d_lee,
    }
}
