use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::{balanced_series_extension, inflate, parallel_path_addition, uniform_labelled};
use crate::error::{input, Result};
use crate::matroid::Matroid;

/// A recipe building a matroid from U(2,n) by balanced series extensions and
/// parallel-path additions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    /// `n` in U(2,n).
    pub base: usize,
    /// Ids of the base elements; `1..=n` when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_labels: Option<Vec<String>>,
    pub steps: Vec<TraceStep>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum TraceStep {
    /// Every element becomes `order` elements in series. `classes` names the new elements
    /// per old element; when absent, `e` becomes `e_0, ..., e_{order-1}`.
    BalancedSeriesExtension {
        order: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        classes: Option<BTreeMap<String, Vec<String>>>,
    },
    /// `fresh[i]` is added as the partner of `path[i]`.
    ParallelPathAddition { path: Vec<String>, fresh: Vec<String> },
}

impl ConstructionTrace {
    pub fn new(base: usize) -> Self {
        ConstructionTrace { base, base_labels: None, steps: Vec::new() }
    }

    pub fn labels(&self) -> Vec<String> {
        match &self.base_labels {
            Some(l) => l.clone(),
            None => (1..=self.base).map(|i| i.to_string()).collect(),
        }
    }

    fn base_matroid(&self) -> Result<Matroid> {
        if self.base < 4 {
            return input("trace base must be U(2,n) with n >= 4");
        }
        let labels = self.labels();
        if labels.len() != self.base {
            return input("trace base labels do not match n");
        }
        uniform_labelled(2, &labels)
    }

    /// The matroid obtained by applying every step to U(2,n).
    pub fn replay(&self) -> Result<Matroid> {
        let mut m = self.base_matroid()?;
        for step in &self.steps {
            m = apply_step(&m, step)?;
        }
        Ok(m)
    }

    /// Replay, returning the matroid before and after each step.
    pub fn replay_all(&self) -> Result<Vec<Matroid>> {
        let mut out = vec![self.base_matroid()?];
        for step in &self.steps {
            let next = apply_step(out.last().unwrap(), step)?;
            out.push(next);
        }
        Ok(out)
    }

    /// True if the trace has at most one balanced extension, placed first.
    pub fn is_normal(&self) -> bool {
        self.steps.iter().enumerate().all(|(i, s)| i == 0 || matches!(s, TraceStep::ParallelPathAddition { .. }))
    }

    /// An equivalent trace in normal form: all balanced extensions are merged into one
    /// (orders multiply) and moved before every parallel-path addition, whose paths are
    /// scaled up by the extension order.
    pub fn normalized(&self) -> Result<ConstructionTrace> {
        let labels = self.labels();
        // classes[b] lists the current elements descending from base element b.
        let mut classes: Vec<(String, Vec<String>)> = labels.iter().map(|l| (l.clone(), vec![l.clone()])).collect();
        let mut order = 1usize;
        let mut adds: Vec<(Vec<String>, Vec<String>)> = Vec::new();
        let mut m = self.base_matroid()?;
        for step in &self.steps {
            let next = apply_step(&m, step)?;
            match step {
                TraceStep::BalancedSeriesExtension { order: k, classes: named } => {
                    let map = class_map(&m, *k, named.as_ref())?;
                    let lift =
                        |xs: &[String]| -> Vec<String> { xs.iter().flat_map(|x| map[x].iter().cloned()).collect() };
                    for (_, cls) in classes.iter_mut() {
                        *cls = lift(cls);
                    }
                    for (p, f) in adds.iter_mut() {
                        *p = lift(p);
                        *f = lift(f);
                    }
                    order *= k;
                }
                TraceStep::ParallelPathAddition { path, fresh } => adds.push((path.clone(), fresh.clone())),
            }
            m = next;
        }
        let mut steps = Vec::new();
        if order > 1 {
            steps.push(TraceStep::BalancedSeriesExtension { order, classes: Some(classes.into_iter().collect()) });
        }
        for (path, fresh) in adds {
            steps.push(TraceStep::ParallelPathAddition { path, fresh });
        }
        Ok(ConstructionTrace { base: self.base, base_labels: self.base_labels.clone(), steps })
    }
}

/// The explicit element-to-class map of a balanced step applied to `m`.
pub(crate) fn class_map(
    m: &Matroid,
    k: usize,
    named: Option<&BTreeMap<String, Vec<String>>>,
) -> Result<HashMap<String, Vec<String>>> {
    if k == 0 {
        return input("balanced series extension order must be at least 1");
    }
    let mut out = HashMap::new();
    for g in m.ground() {
        let cls = match named {
            Some(map) => match map.get(g) {
                Some(c) => c.clone(),
                None => return input(format!("balanced extension lists no class for `{g}`")),
            },
            None if k == 1 => vec![g.clone()],
            None => (0..k).map(|i| format!("{g}_{i}")).collect(),
        };
        if cls.len() != k {
            return input(format!("class of `{g}` has {} elements, expected {k}", cls.len()));
        }
        out.insert(g.clone(), cls);
    }
    if let Some(map) = named {
        if map.len() != m.len() {
            return input("balanced extension names classes for unknown elements");
        }
    }
    Ok(out)
}

pub fn apply_step(m: &Matroid, step: &TraceStep) -> Result<Matroid> {
    match step {
        TraceStep::BalancedSeriesExtension { order, classes: None } => balanced_series_extension(m, *order),
        TraceStep::BalancedSeriesExtension { order, classes: Some(named) } => {
            if !m.coloops().is_empty() {
                return input("balanced series extension needs a matroid without coloops");
            }
            inflate(m, &class_map(m, *order, Some(named))?)
        }
        TraceStep::ParallelPathAddition { path, fresh } => parallel_path_addition(m, path, fresh),
    }
}
