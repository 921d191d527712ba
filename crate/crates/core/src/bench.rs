//! Runs one search per ordering and tabulates the counters.

use crate::error::Result;
use crate::exec::Execution;
use crate::matcher::{Binding, Counter, Matcher, SearchOptions, SearchStats};
use crate::ordering::Ordering;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub ordering: Ordering,
    pub stats: SearchStats,
    pub solutions: usize,
}

#[derive(Clone, Debug)]
pub struct BenchReport {
    /// Sorted ascending by the selected counter, then by ordering.
    pub rows: Vec<BenchRow>,
    /// Orderings whose solution set differs from the first ordering's.
    pub disagreements: Vec<Ordering>,
}

impl BenchReport {
    pub fn consistent(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Searches every ordering. Orderings are spread over `execution`; each
/// individual search runs sequentially.
pub fn run_bench(
    matcher: &Matcher<'_>,
    orderings: &[Ordering],
    options: &SearchOptions,
    sort_by: Counter,
    execution: Execution,
) -> Result<BenchReport> {
    let per_search = SearchOptions {
        execution: Execution::Sequential,
        trace: false,
        ..*options
    };
    let results: Vec<Result<(BenchRow, Vec<Binding>)>> = execution.map(orderings, |o| {
        let r = matcher.run(o, &per_search)?;
        Ok((
            BenchRow {
                ordering: o.clone(),
                stats: r.stats,
                solutions: r.solutions.len(),
            },
            r.solutions,
        ))
    });

    let mut rows = Vec::with_capacity(results.len());
    let mut reference: Option<Vec<Binding>> = None;
    let mut disagreements = Vec::new();
    for result in results {
        let (row, solutions) = result?;
        match &reference {
            None => reference = Some(solutions),
            Some(r) if *r != solutions => disagreements.push(row.ordering.clone()),
            Some(_) => {}
        }
        rows.push(row);
    }
    rows.sort_by(|a, b| {
        sort_by
            .get(&a.stats)
            .cmp(&sort_by.get(&b.stats))
            .then_with(|| a.ordering.cmp(&b.ordering))
    });
    Ok(BenchReport {
        rows,
        disagreements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;
    use crate::hub_cover::{enumerate_minimum_hub_covers, CoverOptions};
    use crate::ordering::enumerate_mhc_orderings;

    #[test]
    fn mhc_bench_is_consistent_and_sorted() {
        let d = parse_edge_list(include_str!("../../../fixtures/data.edges")).unwrap();
        let q = parse_edge_list(include_str!("../../../fixtures/query.edges")).unwrap();
        let covers = enumerate_minimum_hub_covers(&q, &CoverOptions::default()).unwrap();
        let orderings = enumerate_mhc_orderings(&covers);
        let m = Matcher::new(&d, &q).unwrap();
        let report = run_bench(
            &m,
            &orderings,
            &SearchOptions::default(),
            Counter::PartialGenerated,
            Execution::default(),
        )
        .unwrap();
        assert_eq!(report.rows.len(), 24);
        assert!(report.consistent());
        assert!(report.rows.iter().all(|r| r.solutions == 24));
        assert!(report
            .rows
            .windows(2)
            .all(|w| w[0].stats.partial_generated <= w[1].stats.partial_generated));
    }
}
