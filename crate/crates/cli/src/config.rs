use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use kzdyn::linalg::rational::{parse_rational, Rational};
use kzdyn::repr::WeightModule;
use kzdyn::roots::{CartanType, RootSystem};

/// Largest module the suites will build.
pub const MAX_DIM: usize = 256;
pub const MAX_FACTORS: usize = 3;
pub const SEED_ENV: &str = "KZDYN_SEED";

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("unknown Lie type '{0}'")]
    UnknownType(String),
    #[error("rank {rank} is not valid for type {letter}")]
    InvalidRank { letter: char, rank: usize },
    #[error("bad module list '{0}': {1}")]
    BadModules(String, String),
    #[error("bad weight '{0}': {1}")]
    BadWeight(String, String),
    #[error("bad value '{value}' for {key}")]
    BadValue { key: String, value: String },
    #[error("unknown suite '{0}' (expected sl2, braid, fusion, kz, compat or det)")]
    UnknownSuite(String),
    #[error("unknown config key '{0}'")]
    UnknownKey(String),
    #[error("config line {0}: expected key=value")]
    BadLine(usize),
    #[error("{0}")]
    Io(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Sl2,
    Braid,
    Fusion,
    Kz,
    Compat,
    Det,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Sl2,
        Suite::Braid,
        Suite::Fusion,
        Suite::Kz,
        Suite::Compat,
        Suite::Det,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Sl2 => "sl2",
            Suite::Braid => "braid",
            Suite::Fusion => "fusion",
            Suite::Kz => "kz",
            Suite::Compat => "compat",
            Suite::Det => "det",
        }
    }

    /// Stream index for the per-suite random generator.
    pub fn stream(self) -> u64 {
        Suite::ALL.iter().position(|&s| s == self).unwrap() as u64
    }
}

impl FromStr for Suite {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| ConfigError::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Jsonlines,
    Markdown,
}

impl FromStr for Format {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "jsonlines" | "jsonl" => Ok(Format::Jsonlines),
            "markdown" | "md" => Ok(Format::Markdown),
            other => Err(ConfigError::BadValue {
                key: "format".into(),
                value: other.into(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub kind: CartanType,
    pub rank: usize,
    /// Factor tokens: wedge degrees `k`, or `L<m>` for sl_2 irreducibles.
    pub modules: Vec<String>,
    pub weight: Option<Vec<Rational>>,
    pub kappa: Option<Rational>,
    pub samples: usize,
    pub seed: u64,
    pub suites: Vec<Suite>,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            kind: CartanType::A,
            rank: 1,
            modules: vec!["1".into(), "1".into()],
            weight: None,
            kappa: None,
            samples: 3,
            seed: 0,
            suites: Suite::ALL.to_vec(),
            format: Format::Jsonlines,
            out: None,
        }
    }
}

/// Unvalidated settings from flags or a config file; later layers override earlier ones.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Overrides {
    pub lie_type: Option<String>,
    pub rank: Option<String>,
    pub modules: Option<String>,
    pub weight: Option<String>,
    pub kappa: Option<String>,
    pub samples: Option<String>,
    pub seed: Option<String>,
    pub suites: Vec<String>,
    pub format: Option<String>,
    pub out: Option<String>,
}

impl Overrides {
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        let v = Some(value.trim().to_string());
        match key.trim() {
            "type" => self.lie_type = v,
            "rank" => self.rank = v,
            "modules" => self.modules = v,
            "weight" => self.weight = v,
            "kappa" => self.kappa = v,
            "samples" => self.samples = v,
            "seed" => self.seed = v,
            "suite" | "suites" => self
                .suites
                .extend(value.split(',').map(|s| s.trim().to_string())),
            "format" => self.format = v,
            "out" => self.out = v,
            other => return Err(ConfigError::UnknownKey(other.to_string())),
        }
        Ok(())
    }

    /// `key = value` lines; `#` starts a comment.
    pub fn parse_file(text: &str) -> Result<Self, ConfigError> {
        let mut out = Self::default();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or(ConfigError::BadLine(n + 1))?;
            out.set(k, v)?;
        }
        Ok(out)
    }

    pub fn read_file(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError::Io(format!("{}: {e}", path.display())))?;
        Self::parse_file(&text)
    }

    /// Layer `other` on top of `self`.
    pub fn merge(mut self, other: Overrides) -> Self {
        macro_rules! take {
            ($($f:ident),*) => { $( if other.$f.is_some() { self.$f = other.$f; } )* };
        }
        take!(lie_type, rank, modules, weight, kappa, samples, seed, format, out);
        if !other.suites.is_empty() {
            self.suites = other.suites;
        }
        self
    }

    /// Validate into a config; `env_seed` is used only when no seed was given.
    pub fn resolve(self, env_seed: Option<&str>) -> Result<SuiteConfig, ConfigError> {
        let mut cfg = SuiteConfig::default();
        let bad = |key: &str, value: &str| ConfigError::BadValue {
            key: key.into(),
            value: value.into(),
        };
        if let Some(t) = &self.lie_type {
            let t = t.trim();
            let mut chars = t.chars();
            let letter = chars
                .next()
                .ok_or_else(|| ConfigError::UnknownType(t.into()))?;
            cfg.kind = CartanType::from_letter(letter.to_ascii_uppercase())
                .ok_or_else(|| ConfigError::UnknownType(t.into()))?;
            let tail: String = chars.collect();
            if !tail.is_empty() {
                cfg.rank = tail
                    .parse()
                    .map_err(|_| ConfigError::UnknownType(t.into()))?;
            }
        }
        if let Some(r) = &self.rank {
            cfg.rank = r.parse().map_err(|_| bad("rank", r))?;
        }
        if !cfg.kind.valid_rank(cfg.rank) {
            return Err(ConfigError::InvalidRank {
                letter: cfg.kind.letter(),
                rank: cfg.rank,
            });
        }
        if let Some(m) = &self.modules {
            cfg.modules = m
                .split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect();
        }
        if let Some(k) = &self.kappa {
            let k = parse_rational(k)
                .filter(|x| *x != Rational::from_integer(0.into()))
                .ok_or_else(|| bad("kappa", k))?;
            cfg.kappa = Some(k);
        }
        if let Some(s) = &self.samples {
            cfg.samples = s
                .parse()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| bad("samples", s))?;
        }
        let seed = self.seed.as_deref().or(env_seed);
        if let Some(s) = seed {
            cfg.seed = s.trim().parse().map_err(|_| bad("seed", s))?;
        }
        if !self.suites.is_empty() {
            let mut suites: Vec<Suite> = self
                .suites
                .iter()
                .map(|s| s.parse())
                .collect::<Result<_, _>>()?;
            suites.dedup();
            cfg.suites = suites;
        }
        if let Some(f) = &self.format {
            cfg.format = f.parse()?;
        }
        cfg.out = self.out.map(PathBuf::from);
        if let Some(w) = &self.weight {
            let vals: Option<Vec<Rational>> = w.split(',').map(parse_rational).collect();
            let vals = vals.ok_or_else(|| {
                ConfigError::BadWeight(w.clone(), "not a list of rationals".into())
            })?;
            cfg.weight = Some(vals);
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

impl SuiteConfig {
    pub fn root_system(&self) -> RootSystem {
        RootSystem::build(self.kind, self.rank).expect("rank validated")
    }

    pub fn type_name(&self) -> String {
        format!("{}{}", self.kind.letter(), self.rank)
    }

    /// `N:tok,tok` for type A; `None` elsewhere (no modules are built outside type A).
    pub fn descriptor(&self) -> Option<String> {
        (self.kind == CartanType::A)
            .then(|| format!("{}:{}", self.rank + 1, self.modules.join(",")))
    }

    pub fn module(&self) -> Option<WeightModule> {
        self.descriptor()
            .map(|d| WeightModule::from_descriptor(&d).expect("descriptor validated"))
    }

    /// The weight selector projected to the trace-zero hyperplane.
    pub fn projected_weight(&self) -> Option<Vec<Rational>> {
        self.weight.as_ref().map(|w| {
            let n = Rational::from_integer((w.len() as i64).into());
            let mean = w
                .iter()
                .fold(Rational::from_integer(0.into()), |a, b| a + b)
                / n;
            w.iter().map(|x| x - &mean).collect()
        })
    }

    fn validate(&self) -> Result<(), ConfigError> {
        let text = self.modules.join(",");
        if self.modules.is_empty() {
            return Err(ConfigError::BadModules(text, "empty".into()));
        }
        if self.modules.len() > MAX_FACTORS {
            return Err(ConfigError::BadModules(
                text,
                format!("at most {MAX_FACTORS} factors"),
            ));
        }
        if let Some(d) = self.descriptor() {
            let v = WeightModule::from_descriptor(&d)
                .map_err(|e| ConfigError::BadModules(text.clone(), e.to_string()))?;
            if v.dim() > MAX_DIM {
                return Err(ConfigError::BadModules(
                    text,
                    format!("dimension {} exceeds {MAX_DIM}", v.dim()),
                ));
            }
            if let Some(w) = &self.weight {
                if w.len() != self.rank + 1 {
                    return Err(ConfigError::BadWeight(
                        w.iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join(","),
                        format!("expected {} entries", self.rank + 1),
                    ));
                }
                let nu = self.projected_weight().unwrap();
                if v.weight_space(&nu).is_empty() {
                    return Err(ConfigError::BadWeight(
                        kzdyn::linalg::rational::fmt_vec(&nu),
                        "not a weight of the module".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}
