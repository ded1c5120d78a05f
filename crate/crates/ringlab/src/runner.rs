//! Parallel suite execution. Checks are independent, so they are farmed
//! out to a scoped thread pool; results are merged by registry index, so
//! the report is byte-identical for every worker count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use ringlab_core::harness::{self, CheckOutcome, RingCorpus, SuiteReport};
use ringlab_core::Caps;

pub fn run_suite_parallel(
    corpus: &RingCorpus,
    caps: &Caps,
    filter: Option<&[&str]>,
    jobs: usize,
) -> SuiteReport {
    let defs = harness::selected_checks(filter);
    let tasks = defs.len();
    let jobs = jobs.max(1).min(tasks.max(1));
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<Vec<CheckOutcome>>>> =
        (0..tasks).map(|_| Mutex::new(None)).collect();
    thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= tasks {
                    break;
                }
                let outcomes = (defs[i].run)(corpus, caps);
                *slots[i].lock().expect("result slot") = Some(outcomes);
            });
        }
    });
    let results = defs
        .into_iter()
        .zip(slots)
        .map(|(def, slot)| {
            let outcomes = slot
                .into_inner()
                .expect("result slot")
                .expect("every task ran");
            (def, outcomes)
        })
        .collect();
    harness::assemble_report(corpus, results)
}
