use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::classify;
use crate::error::Result;
use crate::perm::{all_subgroups, recognize, GroupName, PermGroup, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanProgress {
    Enumerating,
    Enumerated { total: usize },
    Filtered { survivors: usize },
    Done,
}

/// A surviving subgroup that is not isomorphic to any group realized for `M_3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanException {
    pub name: String,
    pub order: usize,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub total_subgroups: usize,
    pub survivors: usize,
    /// Survivor counts keyed by group code.
    pub by_class: BTreeMap<String, usize>,
    pub exceptions: Vec<ScanException>,
}

impl CorollaryReport {
    pub fn holds(&self) -> bool {
        self.exceptions.is_empty()
    }

    /// Exception counts keyed by group code.
    pub fn exception_counts(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for e in &self.exceptions {
            *out.entry(e.name.clone()).or_insert(0) += 1;
        }
        out
    }
}

fn survives(h: &PermGroup) -> bool {
    h.elements()
        .iter()
        .all(|p| !p.is_transposition() && !matches!(p.order(), 4 | 5))
}

/// Scans every subgroup of S6 without transpositions and without elements of
/// order 4 or 5, checking each against the groups realized for `M_3`.
pub fn corollary_scan_s6(mut progress: impl FnMut(ScanProgress)) -> Result<CorollaryReport> {
    let allowed = classify(3)?.names();
    let s6 = PermGroup::generate(&[
        Permutation::parse("(1 2)", 6)?,
        Permutation::parse("(1 2 3 4 5 6)", 6)?,
    ])?;

    progress(ScanProgress::Enumerating);
    let subs = all_subgroups(&s6)?;
    progress(ScanProgress::Enumerated { total: subs.len() });

    let kept: Vec<&PermGroup> = subs.iter().filter(|h| survives(h)).collect();
    progress(ScanProgress::Filtered {
        survivors: kept.len(),
    });

    let names: Vec<GroupName> = kept.par_iter().map(|h| recognize(h)).collect();
    let mut by_class = BTreeMap::new();
    let mut exceptions = Vec::new();
    for (h, name) in kept.iter().zip(names) {
        *by_class.entry(name.code()).or_insert(0) += 1;
        if !allowed.contains(&name) {
            exceptions.push(ScanException {
                name: name.code(),
                order: h.order(),
                generators: h.generators().iter().map(|g| g.to_string()).collect(),
            });
        }
    }
    progress(ScanProgress::Done);
    Ok(CorollaryReport {
        total_subgroups: subs.len(),
        survivors: kept.len(),
        by_class,
        exceptions,
    })
}
