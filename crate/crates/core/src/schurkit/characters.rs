use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::partition::{partitions, Partition};

/// Largest `n` for which characters and idempotents of `S_n` are computed.
pub const MAX_SYMMETRIC_DEGREE: usize = 8;

pub(crate) fn check_degree(n: usize) -> Result<()> {
    if n > MAX_SYMMETRIC_DEGREE {
        return Err(Error::cap("symmetric group degree", n, MAX_SYMMETRIC_DEGREE));
    }
    Ok(())
}

/// Murnaghan–Nakayama on beta-sets: removing a rim hook of length `r` moves
/// one bead from `b` to `b - r`, with sign given by the beads jumped over.
fn murnaghan_nakayama(beta: &[usize], mu: &[usize]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else { return 1 };
    let mut total = 0;
    for &b in beta {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let next: Vec<usize> = beta.iter().map(|&x| if x == b { b - r } else { x }).collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * murnaghan_nakayama(&next, rest);
    }
    total
}

/// `χ_λ(σ)` for `σ` of cycle type `mu`.
pub fn character_value(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.weight() != mu.weight() {
        return Err(Error::invalid(format!("{lambda} and cycle type {mu} have different weights")));
    }
    check_degree(lambda.weight())?;
    let l = lambda.len();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    Ok(murnaghan_nakayama(&beta, mu.parts()))
}

/// The row of the character table of `S_n` at `λ`, keyed by cycle type.
/// The value at the identity is checked against the hook length formula.
pub fn character_table_row(lambda: &Partition) -> Result<BTreeMap<Partition, i64>> {
    let n = lambda.weight();
    check_degree(n)?;
    let row = partitions(n)
        .into_iter()
        .map(|mu| Ok((mu.clone(), character_value(lambda, &mu)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let id = Partition::from_unsorted(vec![1; n]);
    if row[&id] as u128 != lambda.standard_tableaux() {
        return Err(Error::invariant(format!("χ_{lambda}(id) disagrees with the hook length formula")));
    }
    Ok(row)
}
