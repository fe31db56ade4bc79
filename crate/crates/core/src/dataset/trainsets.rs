use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::model::{Dataset, GroupPartition, Split};

const GROUPS: usize = 10;

/// The three overlapping training sets cut from ten rank groups: low uses
/// groups 1-8, mid 2-9 and high 3-10.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainingSets {
    pub low: Dataset,
    pub mid: Dataset,
    pub high: Dataset,
    /// Mean MESIA of each set, from the partition's group means.
    pub mean_mesia: [f64; 3],
}

impl TrainingSets {
    pub fn named(&self) -> [(&'static str, &Dataset, f64); 3] {
        [
            ("L", &self.low, self.mean_mesia[0]),
            ("M", &self.mid, self.mean_mesia[1]),
            ("H", &self.high, self.mean_mesia[2]),
        ]
    }
}

/// Builds the low/mid/high sets. Pairs keep their order from `dataset`.
pub fn build_training_sets(partition: &GroupPartition, dataset: &Dataset) -> Result<TrainingSets> {
    if partition.len() != GROUPS {
        return Err(Error::WrongGroupCount {
            expected: GROUPS,
            got: partition.len(),
        });
    }
    let sizes = partition.sizes();
    if sizes.iter().any(|&s| s != sizes[0]) || sizes[0] == 0 {
        return Err(Error::UnequalGroups(sizes));
    }

    let mut group_of: HashMap<&str, usize> = HashMap::new();
    for (g, members) in partition.groups.iter().enumerate() {
        for id in members {
            group_of.insert(id.as_str(), g);
        }
    }
    let present: std::collections::HashSet<&str> =
        dataset.pairs().iter().map(|p| p.id.as_str()).collect();
    if let Some(missing) = group_of.keys().find(|id| !present.contains(*id)) {
        return Err(Error::UnknownId(missing.to_string()));
    }

    let select = |first: usize, last: usize| -> Dataset {
        let pairs = dataset
            .pairs()
            .iter()
            .filter(|p| {
                group_of
                    .get(p.id.as_str())
                    .is_some_and(|&g| (first..=last).contains(&g))
            })
            .cloned()
            .collect();
        Dataset::new(Split::Train, pairs).expect("subset of a valid dataset")
    };
    let mean = |first: usize, last: usize| -> f64 {
        let values: Vec<f64> = partition.mean_mesia[first..=last]
            .iter()
            .map(|m| m.unwrap_or(f64::NAN))
            .collect();
        values.iter().sum::<f64>() / values.len() as f64
    };

    Ok(TrainingSets {
        low: select(0, 7),
        mid: select(1, 8),
        high: select(2, 9),
        mean_mesia: [mean(0, 7), mean(1, 8), mean(2, 9)],
    })
}
