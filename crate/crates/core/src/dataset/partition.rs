use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{GroupPartition, PartitionKind};

/// Lower edges of the eleven MESIA intervals `[0,1], (1,2], ..., (9,10],
/// (10,+inf)`.
pub const INTERVAL_EDGES: [f64; 11] = [0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0];

/// Which ids to leave out when the item count is not a multiple of `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Remainder {
    /// Keep everything; the first `count % k` groups get one extra item.
    Keep,
    /// Drop the highest-ranked ids.
    High,
    /// Drop the lowest-ranked ids.
    Low,
}

fn check(id: &str, value: f64) -> Result<()> {
    if value.is_nan() || value < 0.0 {
        return Err(Error::NegativeScore {
            id: id.to_string(),
            value,
        });
    }
    Ok(())
}

/// Interval index of a non-negative value; intervals are closed on the right.
pub fn interval_index(value: f64) -> usize {
    if value <= 1.0 {
        0
    } else if value > 10.0 {
        10
    } else {
        value.ceil() as usize - 1
    }
}

fn means(groups: &[Vec<(&str, f64)>]) -> Vec<Option<f64>> {
    groups
        .iter()
        .map(|g| {
            (!g.is_empty()).then(|| g.iter().map(|(_, v)| v).sum::<f64>() / g.len() as f64)
        })
        .collect()
}

fn ids(groups: Vec<Vec<(&str, f64)>>) -> Vec<Vec<String>> {
    groups
        .into_iter()
        .map(|g| g.into_iter().map(|(id, _)| id.to_string()).collect())
        .collect()
}

/// Assigns each `(id, mesia)` to one of the eleven fixed intervals, keeping
/// input order within a bin.
pub fn bin_by_interval<'a, I>(scores: I) -> Result<GroupPartition>
where
    I: IntoIterator<Item = (&'a str, f64)>,
{
    let mut bins: Vec<Vec<(&str, f64)>> = vec![Vec::new(); INTERVAL_EDGES.len()];
    for (id, value) in scores {
        check(id, value)?;
        bins[interval_index(value)].push((id, value));
    }
    Ok(GroupPartition {
        kind: PartitionKind::IntervalBins,
        mean_mesia: means(&bins),
        groups: ids(bins),
        boundaries: Some(INTERVAL_EDGES.to_vec()),
        dropped: Vec::new(),
    })
}

/// Sorts ids by ascending MESIA (ties by id) and cuts them into `k` groups.
/// Group 0 holds the smallest values.
pub fn partition_ranked<'a, I>(scores: I, k: usize, remainder: Remainder) -> Result<GroupPartition>
where
    I: IntoIterator<Item = (&'a str, f64)>,
{
    if k == 0 {
        return Err(Error::WrongGroupCount { expected: 1, got: 0 });
    }
    let mut ranked: Vec<(&str, f64)> = Vec::new();
    for (id, value) in scores {
        check(id, value)?;
        ranked.push((id, value));
    }
    if ranked.len() < k {
        return Err(Error::TooFewItems {
            needed: k,
            got: ranked.len(),
        });
    }
    ranked.sort_by(|a, b| a.1.total_cmp(&b.1).then_with(|| a.0.cmp(b.0)));

    let extra = ranked.len() % k;
    let dropped: Vec<String> = match remainder {
        Remainder::Keep => Vec::new(),
        Remainder::High => ranked.drain(ranked.len() - extra..).map(|(id, _)| id.to_string()).collect(),
        Remainder::Low => ranked.drain(..extra).map(|(id, _)| id.to_string()).collect(),
    };

    let base = ranked.len() / k;
    let extra = ranked.len() % k;
    let mut groups = Vec::with_capacity(k);
    let mut rest = ranked.as_slice();
    for g in 0..k {
        let size = base + usize::from(g < extra);
        let (head, tail) = rest.split_at(size);
        groups.push(head.to_vec());
        rest = tail;
    }

    Ok(GroupPartition {
        kind: PartitionKind::RankDeciles,
        mean_mesia: means(&groups),
        groups: ids(groups),
        boundaries: None,
        dropped,
    })
}
