//! Generator events along a pole-number sequence `0 = m_0 < m_1 < … < m_r`.
//!
//! Index `i` is reported when `m_{i+1}` is not a nonnegative combination of
//! `m_1, …, m_i`. Only such indices can carry a jump of the filtration by
//! kernels of the actions on `L(m_i P)`, and their number is the number of
//! minimal generators among the listed pole numbers. Nothing here models the
//! group itself.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    pub pole_numbers: Vec<u64>,
    /// Indices `i` with `m_{i+1}` a new generator.
    pub jump_indices: Vec<usize>,
    /// The new generators `m_{i+1}`, one per jump index.
    pub generators: Vec<u64>,
}

impl FiltrationReport {
    pub fn jump_count(&self) -> usize {
        self.jump_indices.len()
    }
}

pub fn jumps(pole_numbers: &[u64]) -> Result<FiltrationReport> {
    if pole_numbers.first() != Some(&0) {
        return Err(Error::NotIncreasing("sequence must start at 0".into()));
    }
    if let Some(w) = pole_numbers.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::NotIncreasing(format!(
            "{} is followed by {}",
            w[0], w[1]
        )));
    }
    let top = *pole_numbers.last().unwrap() as usize;
    // reachable[n]: n is a combination of the generators found so far
    let mut reachable = vec![false; top + 1];
    reachable[0] = true;
    let mut jump_indices = Vec::new();
    let mut generators = Vec::new();
    for (i, &next) in pole_numbers.iter().enumerate().skip(1) {
        if reachable[next as usize] {
            continue;
        }
        jump_indices.push(i - 1);
        generators.push(next);
        let g = next as usize;
        for n in g..=top {
            if reachable[n - g] {
                reachable[n] = true;
            }
        }
    }
    Ok(FiltrationReport {
        pole_numbers: pole_numbers.to_vec(),
        jump_indices,
        generators,
    })
}

/// Whether a kernel of order `claimed_order` is compatible with a function
/// of pole order `pole_number` being invariant under it.
pub fn kernel_order_divides(pole_number: u64, claimed_order: u64) -> bool {
    claimed_order != 0 && pole_number.is_multiple_of(claimed_order)
}

/// Checks a claimed order of the kernel at index `index` against every
/// positive pole number `m_ν` with `ν ≤ index`. Returns the first pole number
/// the order fails to divide.
pub fn first_kernel_inconsistency(
    pole_numbers: &[u64],
    index: usize,
    claimed_order: u64,
) -> Result<Option<u64>> {
    if index >= pole_numbers.len() {
        return Err(Error::InvalidArgument(format!(
            "index {index} out of range for {} pole numbers",
            pole_numbers.len()
        )));
    }
    if claimed_order == 0 {
        return Err(Error::InvalidArgument(
            "kernel order must be positive".into(),
        ));
    }
    Ok(pole_numbers[..=index]
        .iter()
        .copied()
        .filter(|&m| m > 0)
        .find(|&m| !kernel_order_divides(m, claimed_order)))
}
