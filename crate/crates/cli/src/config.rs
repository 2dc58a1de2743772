use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, ValueEnum};
use koornwinder::koornwinder::blacklist;
use koornwinder::qkernel::ParamSet;
use koornwinder::verify::{random_params, VerifyConfig};
use koornwinder::Rational;

use crate::error::CliError;

pub const SEED_ENV: &str = "KOORNWINDER_SEED";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Csv,
}

impl Format {
    pub fn from_str_ci(s: &str) -> Result<Self, CliError> {
        <Format as ValueEnum>::from_str(s, true).map_err(|_| CliError::Usage(format!("unknown format {s:?}")))
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Latex => "latex",
            Format::Csv => "csv",
        })
    }
}

/// Flags shared by every subcommand. Anything left unset falls back to the
/// config file, then (for the seed) to `KOORNWINDER_SEED`, then to a default.
#[derive(Args, Clone, Debug, Default)]
pub struct CommonArgs {
    /// Seed for sampled parameters.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// File of `key = value` lines supplying any of these flags.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Rank.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Column length.
    #[arg(long, global = true)]
    pub r: Option<usize>,
    /// Kostka index: the lower column is `(1^{r-l})`.
    #[arg(long, global = true)]
    pub l: Option<usize>,
    /// Matrix block size.
    #[arg(long, global = true)]
    pub size: Option<usize>,
    /// Series truncation degree.
    #[arg(long, global = true)]
    pub degree: Option<usize>,
    /// Sampled parameter points per check.
    #[arg(long, global = true)]
    pub points: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Explicit parameters as "num/den"; all six or none.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub p: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub tau: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub d: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamMode {
    RandomRational,
    /// `(p, tau, a, b, c, d)` as given.
    Explicit([String; 6]),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    pub n: usize,
    pub r: usize,
    pub l: usize,
    /// Block size; each command has its own default.
    pub size: Option<usize>,
    pub degree: Option<usize>,
    pub points: usize,
    pub params: ParamMode,
    pub format: Format,
}

const KEYS: [&str; 14] = ["seed", "n", "r", "l", "size", "degree", "points", "format", "p", "tau", "a", "b", "c", "d"];
const PARAM_KEYS: [&str; 6] = ["p", "tau", "a", "b", "c", "d"];

/// `key = value` lines; blank lines and `#` comments are skipped.
pub fn parse_config_file(text: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("config line {}: expected key = value", i + 1)))?;
        let k = k.trim();
        if !KEYS.contains(&k) {
            return Err(CliError::Usage(format!("config line {}: unknown key {k:?}", i + 1)));
        }
        out.insert(k.to_string(), v.trim().to_string());
    }
    Ok(out)
}

fn parse_num<T: FromStr>(key: &str, v: &str) -> Result<T, CliError> {
    v.parse().map_err(|_| CliError::Usage(format!("{key}: cannot parse {v:?}")))
}

impl RunConfig {
    /// Merge flags over the config file over the environment seed.
    pub fn resolve(args: &CommonArgs, env_seed: Option<String>) -> Result<Self, CliError> {
        let file = match &args.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                parse_config_file(&text)?
            }
            None => BTreeMap::new(),
        };
        let get = |key: &str| file.get(key).map(String::as_str);
        fn pick<T: FromStr>(flag: Option<T>, key: &str, file: Option<&str>) -> Result<Option<T>, CliError> {
            match flag {
                Some(v) => Ok(Some(v)),
                None => file.map(|v| parse_num(key, v)).transpose(),
            }
        }
        let env_seed = env_seed.map(|v| parse_num::<u64>(SEED_ENV, &v)).transpose()?;
        let seed = pick(args.seed, "seed", get("seed"))?.or(env_seed).unwrap_or(0);
        let format = match args.format {
            Some(f) => f,
            None => get("format").map(Format::from_str_ci).transpose()?.unwrap_or(Format::Json),
        };
        let flags = [&args.p, &args.tau, &args.a, &args.b, &args.c, &args.d];
        let given: Vec<Option<String>> = flags
            .iter()
            .zip(PARAM_KEYS)
            .map(|(f, k)| f.as_ref().cloned().or_else(|| get(k).map(str::to_string)))
            .collect();
        let params = match given.iter().filter(|x| x.is_some()).count() {
            0 => ParamMode::RandomRational,
            6 => ParamMode::Explicit(std::array::from_fn(|i| given[i].clone().unwrap_or_default())),
            _ => return Err(CliError::Usage("explicit parameters need all of p, tau, a, b, c, d".into())),
        };
        Ok(RunConfig {
            seed,
            n: pick(args.n, "n", get("n"))?.unwrap_or(2),
            r: pick(args.r, "r", get("r"))?.unwrap_or(1),
            l: pick(args.l, "l", get("l"))?.unwrap_or(0),
            size: pick(args.size, "size", get("size"))?,
            degree: pick(args.degree, "degree", get("degree"))?,
            points: pick(args.points, "points", get("points"))?.unwrap_or(3),
            params,
            format,
        })
    }

    /// The parameter set for a computation at rank `rank`: sampled from the
    /// seed, or the explicit values once they pass the genericity certificate.
    pub fn param_set(&self, rank: usize) -> Result<ParamSet<Rational>, CliError> {
        let rank = rank.max(1);
        match &self.params {
            ParamMode::RandomRational => Ok(random_params(self.seed, 0, rank)),
            ParamMode::Explicit(v) => {
                let mut x = Vec::with_capacity(6);
                for (s, k) in v.iter().zip(PARAM_KEYS) {
                    x.push(s.parse::<Rational>().map_err(|e| CliError::Usage(format!("{k}: {e}")))?);
                }
                let [p, tau, a, b, c, d]: [Rational; 6] = x.try_into().expect("six values");
                Ok(ParamSet::certified(p, tau, a, b, c, d, &blacklist(rank))?)
            }
        }
    }

    pub fn verify_config(&self) -> VerifyConfig {
        VerifyConfig { seed: self.seed, n: self.n, size: self.size.unwrap_or(8), degree: self.degree, points: self.points }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_file_lines() {
        let m = parse_config_file("# run\nseed = 4\n\nn=3  # rank\np = 1/3\n").unwrap();
        assert_eq!(m["seed"], "4");
        assert_eq!(m["n"], "3");
        assert_eq!(m["p"], "1/3");
        assert!(parse_config_file("bogus = 1").is_err());
        assert!(parse_config_file("seed 4").is_err());
    }

    #[test]
    fn flags_beat_environment() {
        let args = CommonArgs { seed: Some(5), ..Default::default() };
        assert_eq!(RunConfig::resolve(&args, Some("9".into())).unwrap().seed, 5);
        let none = CommonArgs::default();
        assert_eq!(RunConfig::resolve(&none, Some("9".into())).unwrap().seed, 9);
        assert!(RunConfig::resolve(&none, Some("x".into())).is_err());
    }

    #[test]
    fn partial_explicit_parameters_are_rejected() {
        let args = CommonArgs { p: Some("1/2".into()), ..Default::default() };
        assert!(matches!(RunConfig::resolve(&args, None), Err(CliError::Usage(_))));
    }

    #[test]
    fn explicit_parameters_are_certified() {
        let vals = ["2/3", "3/5", "5/7", "-7/11", "11/13", "-13/17"].map(String::from);
        let cfg = RunConfig { params: ParamMode::Explicit(vals.clone()), ..RunConfig::resolve(&CommonArgs::default(), None).unwrap() };
        assert!(cfg.param_set(2).is_ok());
        // c = tau makes c^2 = t
        let mut bad = vals;
        bad[4] = "3/5".into();
        let cfg = RunConfig { params: ParamMode::Explicit(bad), ..cfg };
        assert!(matches!(cfg.param_set(2), Err(CliError::Core(koornwinder::Error::NonGeneric(_)))));
    }
}
