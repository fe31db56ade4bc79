//! `mesia`: score comment informativeness and run the corpus pipeline.
//!
//! Every subcommand writes its data files plus a `*.manifest.json` holding
//! the effective configuration, input and output hashes, and a timestamp.
//! Failures print one JSON object to stderr and exit with a code specific to
//! the error kind (see [`exit_code`]).

mod artifacts;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mesia_core::bleu::BleuVariant;
use mesia_core::config::{DropSide, PipelineConfig};
use mesia_core::dataset::DedupEquality;
use mesia_core::lexer::AcronymRule;
use mesia_core::mesia::LogBase;
use mesia_core::{Error, Result};
use serde::de::DeserializeOwned;

#[derive(Parser)]
#[command(name = "mesia", version, about = "MESIA scoring and comment-corpus pipeline")]
struct Cli {
    #[command(flatten)]
    overrides: ConfigOverrides,
    #[command(subcommand)]
    command: Command,
}

/// Pipeline settings. A TOML file supplies the base values; flags win.
#[derive(Args)]
struct ConfigOverrides {
    /// Pipeline configuration file (TOML).
    #[arg(long, env = "MESIA_CONFIG", global = true)]
    config: Option<PathBuf>,
    /// Logarithm base for information: 2 or e.
    #[arg(long, global = true, value_parser = parse_enum::<LogBase>)]
    log_base: Option<LogBase>,
    /// Stop-word list, one word per line.
    #[arg(long, global = true)]
    stopwords: Option<PathBuf>,
    /// Leave parameter and return types out of the signature words.
    #[arg(long, global = true)]
    no_signature_types: bool,
    /// Acronym handling in identifier splitting: plural-aware or last-upper-starts-word.
    #[arg(long, global = true, value_parser = parse_enum::<AcronymRule>)]
    acronym_rule: Option<AcronymRule>,
    /// Duplicate test for dedup: raw or token.
    #[arg(long, global = true, value_parser = parse_enum::<DedupEquality>)]
    equality: Option<DedupEquality>,
    /// Which end loses the remainder when partitioning: high or low.
    #[arg(long, global = true, value_parser = parse_enum::<DropSide>)]
    drop_side: Option<DropSide>,
    /// Headline BLEU: corpus or sentence-smoothed.
    #[arg(long, global = true, value_parser = parse_enum::<BleuVariant>)]
    bleu_variant: Option<BleuVariant>,
    /// Stem tokens before computing BLEU.
    #[arg(long, global = true)]
    bleu_stemmed: bool,
}

impl ConfigOverrides {
    fn resolve(&self) -> Result<PipelineConfig> {
        let mut config = match &self.config {
            Some(path) => PipelineConfig::load(path)?,
            None => PipelineConfig::default(),
        };
        if let Some(v) = self.log_base {
            config.log_base = v;
        }
        if let Some(v) = &self.stopwords {
            config.stopword_path = Some(v.clone());
        }
        if self.no_signature_types {
            config.signature_types_in_code = false;
        }
        if let Some(v) = self.acronym_rule {
            config.acronym_rule = v;
        }
        if let Some(v) = self.equality {
            config.dedup_equality = v;
        }
        if let Some(v) = self.drop_side {
            config.drop_remainder_side = v;
        }
        if let Some(v) = self.bleu_variant {
            config.bleu_variant = v;
        }
        if self.bleu_stemmed {
            config.bleu_stemmed = true;
        }
        Ok(config)
    }
}

/// Parses a flag value with the same spelling the config file uses.
fn parse_enum<T: DeserializeOwned>(s: &str) -> std::result::Result<T, String> {
    serde_json::from_value(serde_json::Value::String(s.to_string())).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Count comment words over one or more splits (train, then valid, test).
    Stats {
        #[arg(required = true, num_args = 1..=3)]
        datasets: Vec<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Score every pair of a dataset against a word-statistics file.
    Score {
        dataset: PathBuf,
        #[arg(long)]
        stats: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// CSV histogram over the eleven MESIA intervals.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Split used for generated ids; inferred from the file name by default.
        #[arg(long)]
        split: Option<String>,
    },
    /// Remove duplicates within and across the three splits.
    Dedup {
        train: PathBuf,
        valid: PathBuf,
        test: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Group scored pairs by MESIA rank, or into fixed intervals.
    Partition {
        scores: PathBuf,
        #[arg(short, default_value_t = 10)]
        k: usize,
        /// Drop `count % k` pairs so that all groups have equal size.
        #[arg(long)]
        drop_remainder: bool,
        /// Use the eleven unit intervals instead of ranks.
        #[arg(long, conflicts_with_all = ["k", "drop_remainder"])]
        intervals: bool,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Build the low, mid and high training sets from a ten-group partition.
    Trainsets {
        dataset: PathBuf,
        groups: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Corpus and smoothed sentence BLEU, overall or per group.
    Bleu {
        candidates: PathBuf,
        references: PathBuf,
        #[arg(long)]
        groups: Option<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
    },
}

/// Exit status for each error kind. 1 is reserved for panics and 2 for
/// usage errors reported by the argument parser.
fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Io(_) => 3,
        Error::Parse { .. } => 4,
        Error::Config(_) => 5,
        Error::EmptyCorpus => 10,
        Error::MalformedSignature(_) => 11,
        Error::EmptyComment(_) => 12,
        Error::InvalidPair { .. } => 13,
        Error::DuplicateId(_) => 14,
        Error::UnknownId(_) => 15,
        Error::NegativeScore { .. } => 16,
        Error::TooFewItems { .. } => 17,
        Error::WrongGroupCount { .. } => 18,
        Error::UnequalGroups(_) => 19,
        Error::EmptyReference => 20,
        Error::MissingReference(_) => 21,
        Error::MissingCandidate(_) => 22,
    }
}

fn run(cli: Cli) -> Result<()> {
    let config = cli.overrides.resolve()?;
    match cli.command {
        Command::Stats { datasets, output } => commands::stats(&config, &datasets, &output),
        Command::Score {
            dataset,
            stats,
            output,
            report,
            jobs,
            split,
        } => commands::score(
            &config,
            commands::ScoreArgs {
                dataset: &dataset,
                stats: &stats,
                output: &output,
                report: report.as_deref(),
                jobs,
                split: split.as_deref(),
            },
        ),
        Command::Dedup {
            train,
            valid,
            test,
            output,
        } => commands::dedup(&config, [&train, &valid, &test], &output),
        Command::Partition {
            scores,
            k,
            drop_remainder,
            intervals,
            output,
        } => commands::partition(&config, &scores, (!intervals).then_some((k, drop_remainder)), &output),
        Command::Trainsets {
            dataset,
            groups,
            output,
        } => commands::trainsets(&config, &dataset, &groups, &output),
        Command::Bleu {
            candidates,
            references,
            groups,
            output,
        } => commands::bleu(&config, &candidates, &references, groups.as_deref(), &output),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let code = exit_code(&err);
            let line = serde_json::json!({
                "error": err.kind(),
                "exit_code": code,
                "message": err.to_string(),
            });
            eprintln!("{line}");
            ExitCode::from(code)
        }
    }
}
