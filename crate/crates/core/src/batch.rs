//! Batch evaluation: rayon map-reduce over shards, with a sequential path
//! when the `parallel` feature is off or one worker is requested.

use crate::corpus::{aggregate, restyle_corpus, CorpusReport};
use crate::error::Result;
use crate::ingest::IdentifierRecord;
use crate::lexicon::Lexicon;
use crate::rules::{evaluate, NameReport, RuleConfig};

/// Names per shard in the parallel path.
pub const SHARD: usize = 256;

pub fn evaluate_sequential(
    records: &[IdentifierRecord],
    lexicon: &Lexicon,
    cfg: &RuleConfig,
) -> Vec<NameReport> {
    records
        .iter()
        .map(|r| evaluate(r, lexicon, cfg, None))
        .collect()
}

#[cfg(feature = "parallel")]
pub fn evaluate_parallel(
    records: &[IdentifierRecord],
    lexicon: &Lexicon,
    cfg: &RuleConfig,
) -> Vec<NameReport> {
    use rayon::prelude::*;
    records
        .par_iter()
        .map(|r| evaluate(r, lexicon, cfg, None))
        .collect()
}

fn corpus_sequential(
    records: &[IdentifierRecord],
    lexicon: &Lexicon,
    cfg: &RuleConfig,
) -> CorpusReport {
    aggregate(evaluate_sequential(records, lexicon, cfg))
}

#[cfg(feature = "parallel")]
fn corpus_parallel(
    records: &[IdentifierRecord],
    lexicon: &Lexicon,
    cfg: &RuleConfig,
) -> CorpusReport {
    use rayon::prelude::*;
    records
        .par_chunks(SHARD)
        .map(|shard| corpus_sequential(shard, lexicon, cfg))
        .reduce(CorpusReport::default, crate::corpus::merge)
}

#[cfg(feature = "parallel")]
fn build_corpus(
    records: &[IdentifierRecord],
    lexicon: &Lexicon,
    cfg: &RuleConfig,
    jobs: usize,
) -> Result<CorpusReport> {
    match jobs {
        1 => Ok(corpus_sequential(records, lexicon, cfg)),
        0 => Ok(corpus_parallel(records, lexicon, cfg)),
        n => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| {
                    crate::error::Error::Config(format!("cannot start {n} workers: {e}"))
                })?;
            Ok(pool.install(|| corpus_parallel(records, lexicon, cfg)))
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn build_corpus(
    records: &[IdentifierRecord],
    lexicon: &Lexicon,
    cfg: &RuleConfig,
    jobs: usize,
) -> Result<CorpusReport> {
    if jobs > 1 {
        log::debug!("built without the parallel feature; ignoring --jobs {jobs}");
    }
    Ok(corpus_sequential(records, lexicon, cfg))
}

/// Evaluate every record, restyle against the dominant style and put the
/// reports in canonical order. `jobs` = 0 uses all cores.
pub fn analyze(
    records: &[IdentifierRecord],
    lexicon: &Lexicon,
    cfg: &RuleConfig,
    jobs: usize,
) -> Result<CorpusReport> {
    let corpus = build_corpus(records, lexicon, cfg, jobs)?;
    let mut corpus = restyle_corpus(corpus, cfg);
    corpus.canonicalize();
    Ok(corpus)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn records(n: usize) -> Vec<IdentifierRecord> {
        let names = [
            "getFullName",
            "get_full_name",
            "x_cached_node",
            "repr",
            "SendAAAAA",
            "gimpItemGetPath",
        ];
        (0..n)
            .map(|i| {
                IdentifierRecord::new(names[i % names.len()], &format!("f{}.java", i % 7), i + 1)
                    .unwrap()
            })
            .collect()
    }

    #[test]
    fn job_counts_agree() {
        let recs = records(1000);
        let lex = Lexicon::builtin();
        let cfg = RuleConfig::default();
        let one = analyze(&recs, lex, &cfg, 1).unwrap();
        for jobs in [0, 2, 8] {
            assert_eq!(analyze(&recs, lex, &cfg, jobs).unwrap(), one);
        }
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_sequential() {
        let recs = records(600);
        let lex = Lexicon::builtin();
        let cfg = RuleConfig::default();
        assert_eq!(
            evaluate_parallel(&recs, lex, &cfg),
            evaluate_sequential(&recs, lex, &cfg)
        );
    }
}
