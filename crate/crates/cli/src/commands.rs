use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use mesia_core::bleu::{bleu_per_group, BleuVariant, GroupBleu, DEFAULT_MAX_N};
use mesia_core::config::PipelineConfig;
use mesia_core::dataset::{bin_by_interval, build_training_sets, dedup as dedup_splits, partition_ranked, Remainder, INTERVAL_EDGES};
use mesia_core::io::{load_dataset, load_scores, load_texts, read_json, write_dataset, write_json, write_scores, DatasetFormat};
use mesia_core::lexer::{stem, tokenize_comment};
use mesia_core::mesia::{count_tokens, ScoreFailure, Scorer};
use mesia_core::{CorpusStats, Dataset, Error, GroupPartition, PartitionKind, Result, Split};
use serde::Serialize;

use crate::artifacts::{ensure_parent, manifest_path_for, opt_cell, sha256_file, sibling, Manifest, Table};

fn load(path: &Path, split: Split) -> Result<Dataset> {
    load_dataset(path, DatasetFormat::from_path(path), split)
}

/// `train.jsonl` -> train, `valid.csv` -> validation; anything else is train.
fn infer_split(path: &Path) -> Split {
    path.file_stem()
        .and_then(|s| s.to_str())
        .and_then(|s| s.parse().ok())
        .unwrap_or(Split::Train)
}

pub fn stats(config: &PipelineConfig, datasets: &[std::path::PathBuf], output: &Path) -> Result<()> {
    let lexer = config.lexer();
    let splits = [Split::Train, Split::Validation, Split::Test];
    let mut tokens: Vec<Vec<String>> = Vec::new();
    for (path, split) in datasets.iter().zip(splits) {
        let dataset = load(path, split)?;
        tokens.extend(dataset.pairs().iter().map(|p| lexer.comment_tokens(&p.comment).1));
    }
    let stats = count_tokens(tokens.iter().map(Vec::as_slice))?;
    ensure_parent(output)?;
    write_json(output, &stats)?;

    let inputs: Vec<&Path> = datasets.iter().map(|p| p.as_path()).collect();
    Manifest::write(&manifest_path_for(output), "stats", config, &inputs, &[output])?;
    println!(
        "{} comments, {} tokens, {} distinct words",
        tokens.len(),
        stats.total(),
        stats.vocab_size()
    );
    println!("wrote {} (sha256 {})", output.display(), sha256_file(output)?);
    Ok(())
}

pub struct ScoreArgs<'a> {
    pub dataset: &'a Path,
    pub stats: &'a Path,
    pub output: &'a Path,
    pub report: Option<&'a Path>,
    pub jobs: usize,
    pub split: Option<&'a str>,
}

#[derive(Serialize)]
struct Distribution {
    scored: usize,
    failed: usize,
    mean: Option<f64>,
    below_3: f64,
    above_6: f64,
    below_10: f64,
    histogram: Vec<usize>,
    failures: Vec<ScoreFailure>,
}

pub fn score(config: &PipelineConfig, args: ScoreArgs<'_>) -> Result<()> {
    let split = match args.split {
        Some(s) => s.parse()?,
        None => infer_split(args.dataset),
    };
    let dataset = load(args.dataset, split)?;
    let stats: CorpusStats = read_json(args.stats)?;
    let stops = config.stop_words()?;
    let scorer = Scorer {
        lexer: config.lexer(),
        stats: &stats,
        stops: &stops,
        base: config.log_base,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| Error::Config(format!("--jobs: {e}")))?;
    let report = pool.install(|| scorer.score_dataset(dataset.pairs()));

    ensure_parent(args.output)?;
    write_scores(args.output, &report.scores)?;

    let values: Vec<f64> = report.scores.values().map(|s| s.mesia).collect();
    let bins = bin_by_interval(report.mesia_values())?;
    let n = values.len();
    let frac = |pred: fn(f64) -> bool| {
        if n == 0 {
            0.0
        } else {
            values.iter().filter(|v| pred(**v)).count() as f64 / n as f64
        }
    };
    let dist = Distribution {
        scored: n,
        failed: report.failures.len(),
        mean: (n > 0).then(|| values.iter().sum::<f64>() / n as f64),
        below_3: frac(|v| v < 3.0),
        above_6: frac(|v| v > 6.0),
        below_10: frac(|v| v < 10.0),
        histogram: bins.sizes(),
        failures: report.failures,
    };
    let summary_path = sibling(args.output, "summary.json");
    write_json(&summary_path, &dist)?;

    let mut outputs = vec![args.output, summary_path.as_path()];
    if let Some(path) = args.report {
        let mut table = Table::new(&["bin", "lower", "upper", "count"]);
        for (i, count) in dist.histogram.iter().enumerate() {
            let upper = INTERVAL_EDGES.get(i + 1).map(|u| u.to_string()).unwrap_or_else(|| "inf".into());
            table.row(&[(i + 1).to_string(), INTERVAL_EDGES[i].to_string(), upper, count.to_string()]);
        }
        table.write(path)?;
        outputs.push(path);
    }
    Manifest::write(
        &manifest_path_for(args.output),
        "score",
        config,
        &[args.dataset, args.stats],
        &outputs,
    )?;

    println!("scored {} pairs, {} failed", dist.scored, dist.failed);
    if let Some(mean) = dist.mean {
        println!("mean MESIA {mean:.4}");
    }
    println!(
        "below 3: {:.1}%  above 6: {:.1}%  below 10: {:.1}%",
        100.0 * dist.below_3,
        100.0 * dist.above_6,
        100.0 * dist.below_10
    );
    for (i, count) in dist.histogram.iter().enumerate() {
        let label = match i {
            0 => "[0,1]".to_string(),
            10 => "(10,inf)".to_string(),
            _ => format!("({i},{}]", i + 1),
        };
        println!("  {label:>9} {count}");
    }
    Ok(())
}

pub fn dedup(config: &PipelineConfig, inputs: [&Path; 3], out_dir: &Path) -> Result<()> {
    let (train, valid, test, report) = dedup_splits(
        load(inputs[0], Split::Train)?,
        load(inputs[1], Split::Validation)?,
        load(inputs[2], Split::Test)?,
        config.dedup_equality,
    );
    fs::create_dir_all(out_dir)?;
    let paths = ["train.jsonl", "valid.jsonl", "test.jsonl", "report.json"].map(|f| out_dir.join(f));
    write_dataset(&paths[0], &train)?;
    write_dataset(&paths[1], &valid)?;
    write_dataset(&paths[2], &test)?;
    write_json(&paths[3], &report)?;
    let outputs: Vec<&Path> = paths.iter().map(|p| p.as_path()).collect();
    Manifest::write(&out_dir.join("manifest.json"), "dedup", config, &inputs, &outputs)?;

    println!("removed within train: {}", report.train_internal);
    println!("removed within valid: {}", report.valid_internal);
    println!("removed from valid (in train): {}", report.valid_in_train);
    println!("removed within test: {}", report.test_internal);
    println!("removed from test (in train or valid): {}", report.test_in_train_or_valid);
    println!(
        "kept train/valid/test: {}/{}/{}",
        report.train_kept, report.valid_kept, report.test_kept
    );
    Ok(())
}

pub fn partition(
    config: &PipelineConfig,
    scores_path: &Path,
    ranked: Option<(usize, bool)>,
    output: &Path,
) -> Result<()> {
    let scores = load_scores(scores_path)?;
    let values = scores.iter().map(|(id, s)| (id.as_str(), s.mesia));
    let partition = match ranked {
        Some((k, drop)) => {
            let remainder = if drop {
                config.drop_remainder_side.remainder()
            } else {
                Remainder::Keep
            };
            partition_ranked(values, k, remainder)?
        }
        None => bin_by_interval(values)?,
    };
    ensure_parent(output)?;
    write_json(output, &partition)?;
    Manifest::write(&manifest_path_for(output), "partition", config, &[scores_path], &[output])?;

    for (i, (size, mean)) in partition.sizes().iter().zip(&partition.mean_mesia).enumerate() {
        match mean {
            Some(m) => println!("group {:>2}: {size} pairs, mean MESIA {m:.4}", i + 1),
            None => println!("group {:>2}: {size} pairs", i + 1),
        }
    }
    if !partition.dropped.is_empty() {
        println!("dropped {} pairs", partition.dropped.len());
    }
    Ok(())
}

#[derive(Serialize)]
struct TrainsetSummary {
    name: &'static str,
    groups: &'static str,
    size: usize,
    mean_mesia: f64,
}

pub fn trainsets(config: &PipelineConfig, dataset_path: &Path, groups_path: &Path, out_dir: &Path) -> Result<()> {
    let dataset = load(dataset_path, Split::Train)?;
    let partition: GroupPartition = read_json(groups_path)?;
    let sets = build_training_sets(&partition, &dataset)?;
    fs::create_dir_all(out_dir)?;

    let mut outputs = Vec::new();
    let mut summary = Vec::new();
    for ((name, set, mean), groups) in sets.named().into_iter().zip(["1-8", "2-9", "3-10"]) {
        let path = out_dir.join(format!("{name}.jsonl"));
        write_dataset(&path, set)?;
        outputs.push(path);
        summary.push(TrainsetSummary {
            name,
            groups,
            size: set.len(),
            mean_mesia: mean,
        });
        println!("{name}: groups {groups}, {} pairs, mean MESIA {mean:.4}", set.len());
    }
    let summary_path = out_dir.join("summary.json");
    write_json(&summary_path, &summary)?;
    outputs.push(summary_path);
    let outputs: Vec<&Path> = outputs.iter().map(|p| p.as_path()).collect();
    Manifest::write(
        &out_dir.join("manifest.json"),
        "trainsets",
        config,
        &[dataset_path, groups_path],
        &outputs,
    )?;
    Ok(())
}

fn bleu_tokens(text: &str, stemmed: bool) -> Vec<String> {
    let tokens = tokenize_comment(text);
    if stemmed {
        tokens.iter().map(|t| stem(t)).collect()
    } else {
        tokens
    }
}

pub fn bleu(
    config: &PipelineConfig,
    candidates_path: &Path,
    references_path: &Path,
    groups_path: Option<&Path>,
    output: &Path,
) -> Result<()> {
    let tokenize = |texts: indexmap::IndexMap<String, String>| -> BTreeMap<String, Vec<String>> {
        texts
            .into_iter()
            .map(|(id, text)| (id, bleu_tokens(&text, config.bleu_stemmed)))
            .collect()
    };
    let candidates = tokenize(load_texts(candidates_path, "cand")?);
    let references = tokenize(load_texts(references_path, "ref")?);

    let partition = match groups_path {
        Some(path) => read_json(path)?,
        None => GroupPartition {
            kind: PartitionKind::RankDeciles,
            groups: vec![candidates.keys().cloned().collect()],
            boundaries: None,
            mean_mesia: vec![None],
            dropped: Vec::new(),
        },
    };
    let rows = bleu_per_group(&candidates, &references, &partition, DEFAULT_MAX_N)?;

    let mut table = Table::new(&["group", "size", "mean_mesia", "corpus_bleu", "sentence_bleu"]);
    for row in &rows {
        table.row(&[
            row.group.to_string(),
            row.size.to_string(),
            opt_cell(row.mean_mesia),
            row.corpus_bleu.to_string(),
            row.sentence_bleu.to_string(),
        ]);
    }
    table.write(output)?;
    let mut inputs = vec![candidates_path, references_path];
    inputs.extend(groups_path);
    Manifest::write(&manifest_path_for(output), "bleu", config, &inputs, &[output])?;

    let headline = |r: &GroupBleu| match config.bleu_variant {
        BleuVariant::Corpus => r.corpus_bleu,
        BleuVariant::SentenceSmoothed => r.sentence_bleu,
    };
    println!("group  size  mean_mesia  corpus_bleu  sentence_bleu");
    for row in &rows {
        println!(
            "{:>5} {:>5} {:>11} {:>12.4} {:>14.4}",
            row.group,
            row.size,
            row.mean_mesia.map(|m| format!("{m:.4}")).unwrap_or_else(|| "-".into()),
            row.corpus_bleu,
            row.sentence_bleu
        );
    }
    let label = match config.bleu_variant {
        BleuVariant::Corpus => "corpus BLEU-4",
        BleuVariant::SentenceSmoothed => "smoothed sentence BLEU-4",
    };
    let best = rows
        .iter()
        .filter(|r| r.size > 0)
        .max_by(|a, b| headline(a).total_cmp(&headline(b)));
    if let Some(best) = best {
        println!("headline {label}: best group {} ({:.4})", best.group, headline(best));
    }
    Ok(())
}
