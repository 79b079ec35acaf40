//! Class counts over the constructor corpus.

use std::sync::Arc;

use serde::Serialize;

use crate::dessin::{classify_dessins, classify_dessins_by_extension, Dessin};
use crate::error::Result;
use crate::group::{build_group, constructor_corpus, ConstructorFamily, AUTOMORPHISM_BOUND};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub group: String,
    pub order: usize,
    /// Absent above the automorphism bound, where classes come from pairwise
    /// extension tests instead.
    pub automorphisms: Option<usize>,
    pub generating_pairs: usize,
    pub classes: usize,
    pub symmetric: usize,
    pub reflexible: usize,
    pub totally_symmetric: usize,
    pub nilpotency_class: Option<usize>,
    pub genera: Vec<u64>,
}

pub const CENSUS_HEADER: [&str; 10] = [
    "Group",
    "Order",
    "Aut",
    "Pairs",
    "Classes",
    "Symmetric",
    "Reflexible",
    "Totally symmetric",
    "Class",
    "Genera",
];

impl CensusRow {
    pub fn cells(&self) -> Vec<String> {
        let opt = |v: Option<usize>| v.map_or_else(|| "-".into(), |c| c.to_string());
        let genera: Vec<String> = self.genera.iter().map(u64::to_string).collect();
        vec![
            self.group.clone(),
            self.order.to_string(),
            opt(self.automorphisms),
            self.generating_pairs.to_string(),
            self.classes.to_string(),
            self.symmetric.to_string(),
            self.reflexible.to_string(),
            self.totally_symmetric.to_string(),
            opt(self.nilpotency_class),
            genera.join(" "),
        ]
    }
}

/// One row per corpus group, in corpus order. `genera` is the sorted list of
/// distinct genera.
pub fn census(max_order: u64, families: &[ConstructorFamily]) -> Result<Vec<CensusRow>> {
    constructor_corpus(max_order, families)
        .iter()
        .map(|spec| {
            let group = Arc::new(build_group(spec)?);
            let c = if group.order() <= AUTOMORPHISM_BOUND {
                classify_dessins(&group)?
            } else {
                classify_dessins_by_extension(&group)
            };
            let count = |f: fn(&Dessin) -> bool| c.representatives.iter().filter(|d| f(d)).count();
            let mut genera: Vec<u64> = c.representatives.iter().map(Dessin::genus).collect();
            genera.sort_unstable();
            genera.dedup();
            Ok(CensusRow {
                group: spec.to_string(),
                order: group.order(),
                automorphisms: c.automorphisms,
                generating_pairs: c.generating_pairs,
                classes: c.class_count(),
                symmetric: count(Dessin::is_symmetric),
                reflexible: count(Dessin::is_reflexible),
                totally_symmetric: count(Dessin::is_totally_symmetric),
                nilpotency_class: group.nilpotency_class(),
                genera,
            })
        })
        .collect()
}
