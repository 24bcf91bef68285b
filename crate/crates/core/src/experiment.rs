//! Config-driven experiments. A run is described by one TOML file; every
//! output embeds the fully resolved config so it can be replayed.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::cayley::{
    BallIndex, BallLimits, DEFAULT_DEPTH_CAP, DEFAULT_MAX_BYTES, DEFAULT_MAX_ELEMENTS,
};
use crate::constants::{estimate_constants, ConstantsParams};
use crate::error::Error;
use crate::gensets::{
    build_bound_gens, build_explicit_gens, build_standard_gens, build_unbound_gens,
    find_digit_bound, DigitSystem, GeneratingSet, DEFAULT_EXPANSION_BUDGET,
};
use crate::group::{GroupElement, GroupSpec, ModuleElement};
use crate::linalg::IntMatrix;
use crate::twords::{Alphabet, Window};
use crate::witnesses::{bs_kn, check_kn_condition, measure_acx, measure_deep, KnParams};

pub const FORMAT_VERSION: u32 = 1;

/// Errors of a run, each mapped to a process exit code.
#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("config error: {0}")]
    Config(String),
    #[error(transparent)]
    Toolkit(#[from] Error),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Config(_) | RunError::Io { .. } => 1,
            RunError::Toolkit(e) => match e {
                Error::ResourceExhausted { .. }
                | Error::InsufficientRadius { .. }
                | Error::Overflow(_) => 2,
                Error::BoundedSearchExhausted(_) | Error::BoundSearchExhausted { .. } => 3,
                _ => 1,
            },
        }
    }
}

pub type RunResult<T> = std::result::Result<T, RunError>;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ExperimentConfig {
    pub group: GroupConfig,
    pub alphabet: AlphabetConfig,
    pub genset: GensetConfig,
    pub ball: BallConfig,
    pub deadends: DeadEndsConfig,
    pub acx: AcxConfig,
    pub witness: WitnessConfig,
    pub constants: ConstantsConfig,
    pub digits: DigitsConfig,
    pub run: RunConfig,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GroupConfig {
    /// `lamplighter`, `bs` or `matrix`
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    /// row-major entries
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<i64>>,
}

impl Default for GroupConfig {
    fn default() -> Self {
        GroupConfig {
            kind: "lamplighter".into(),
            q: None,
            m: None,
            dim: None,
            matrix: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct AlphabetConfig {
    /// `standard`, `explicit` or `auto-strongly-tlog`
    pub mode: String,
    pub letters: Vec<String>,
    pub max_bound: u32,
    pub budget: usize,
}

impl Default for AlphabetConfig {
    fn default() -> Self {
        AlphabetConfig {
            mode: "standard".into(),
            letters: Vec::new(),
            max_bound: 6,
            budget: DEFAULT_EXPANSION_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GensetConfig {
    /// `unbound`, `bound`, `standard` or `explicit`
    pub kind: String,
    pub spellings: Vec<String>,
}

impl Default for GensetConfig {
    fn default() -> Self {
        GensetConfig {
            kind: "unbound".into(),
            spellings: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct BallConfig {
    pub radius: u32,
}

impl Default for BallConfig {
    fn default() -> Self {
        BallConfig { radius: 6 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct DeadEndsConfig {
    pub radii: Vec<u32>,
    pub depth_cap: u32,
}

impl Default for DeadEndsConfig {
    fn default() -> Self {
        DeadEndsConfig {
            radii: vec![6],
            depth_cap: DEFAULT_DEPTH_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct AcxConfig {
    pub radius: u32,
    pub levels: Vec<u32>,
    pub pair_distance_cap: u32,
}

impl Default for AcxConfig {
    fn default() -> Self {
        AcxConfig {
            radius: 10,
            levels: vec![4, 6],
            pair_distance_cap: 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct WitnessConfig {
    /// `deep`, `acx` or `kn`
    pub family: String,
    pub n: Vec<u32>,
    /// `J` values for `acx`
    pub j: Vec<u32>,
    /// letter `a`; empty selects the first nonzero letter
    pub letter: String,
    pub radius: u32,
    pub depth_cap: u32,
    /// `kn` only
    pub kn_i: i64,
    pub kn_j: i64,
}

impl Default for WitnessConfig {
    fn default() -> Self {
        WitnessConfig {
            family: "deep".into(),
            n: vec![1, 2],
            j: vec![1],
            letter: String::new(),
            radius: 10,
            depth_cap: DEFAULT_DEPTH_CAP,
            kn_i: 1,
            kn_j: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ConstantsConfig {
    pub windows: Vec<[i64; 2]>,
    pub length_cap: u32,
    pub margin: i64,
    pub pairs_budget: usize,
    pub word_samples: usize,
    pub seed: u64,
}

impl Default for ConstantsConfig {
    fn default() -> Self {
        let p = ConstantsParams::new(Window { lo: -5, hi: 5 }, 8);
        ConstantsConfig {
            windows: vec![[-5, 5]],
            length_cap: p.length_cap,
            margin: p.margin,
            pairs_budget: p.pairs_budget,
            word_samples: p.word_samples,
            seed: p.seed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct DigitsConfig {
    pub max_bound: u32,
    pub budget: usize,
}

impl Default for DigitsConfig {
    fn default() -> Self {
        DigitsConfig {
            max_bound: 6,
            budget: DEFAULT_EXPANSION_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub out: String,
    pub workers: usize,
    pub mem_cap: usize,
    pub max_elements: usize,
    pub dump_words: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            out: "out".into(),
            workers: 1,
            mem_cap: DEFAULT_MAX_BYTES,
            max_elements: DEFAULT_MAX_ELEMENTS,
            dump_words: false,
        }
    }
}

fn bad(field: &str, msg: impl std::fmt::Display) -> RunError {
    RunError::Config(format!("{field}: {msg}"))
}

impl ExperimentConfig {
    pub fn parse(text: &str) -> RunResult<Self> {
        let cfg: ExperimentConfig =
            toml::from_str(text).map_err(|e| RunError::Config(e.to_string()))?;
        cfg.resolved()
    }

    /// Fills implicit defaults so they are recorded, then validates.
    pub fn resolved(mut self) -> RunResult<Self> {
        if self.group.kind == "lamplighter" && self.group.q.is_none() {
            self.group.q = Some(2);
        }
        self.validate()?;
        Ok(self)
    }

    pub fn load(path: &Path) -> RunResult<Self> {
        let text = fs::read_to_string(path).map_err(|source| RunError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Checks every section that can be checked without computing.
    pub fn validate(&self) -> RunResult<()> {
        let spec = self.group_spec()?;
        if !matches!(
            self.alphabet.mode.as_str(),
            "standard" | "explicit" | "auto-strongly-tlog"
        ) {
            return Err(bad(
                "alphabet.mode",
                format!("unknown mode `{}`", self.alphabet.mode),
            ));
        }
        if self.alphabet.mode == "explicit" {
            for l in &self.alphabet.letters {
                spec.parse_element(l)
                    .map_err(|e| bad("alphabet.letters", e))?;
            }
        }
        if !matches!(
            self.genset.kind.as_str(),
            "unbound" | "bound" | "standard" | "explicit"
        ) {
            return Err(bad(
                "genset.kind",
                format!("unknown kind `{}`", self.genset.kind),
            ));
        }
        if self.genset.kind == "explicit" && self.genset.spellings.is_empty() {
            return Err(bad("genset.spellings", "an explicit set needs spellings"));
        }
        if !matches!(self.witness.family.as_str(), "deep" | "acx" | "kn") {
            return Err(bad(
                "witness.family",
                format!("unknown family `{}`", self.witness.family),
            ));
        }
        if self.witness.n.is_empty() {
            return Err(bad("witness.n", "empty"));
        }
        if self.witness.family == "kn" && !matches!(spec, GroupSpec::BaumslagSolitar { .. }) {
            return Err(bad("witness.family", "kn requires group.kind = \"bs\""));
        }
        if !self.witness.letter.is_empty() {
            spec.parse_element(&self.witness.letter)
                .map_err(|e| bad("witness.letter", e))?;
        }
        if self.deadends.radii.is_empty() {
            return Err(bad("deadends.radii", "empty"));
        }
        for &r in &self.acx.levels {
            if r + self.acx.pair_distance_cap / 2 > self.acx.radius {
                return Err(bad(
                    "acx.levels",
                    format!(
                        "level {r} needs radius {}",
                        r + self.acx.pair_distance_cap / 2
                    ),
                ));
            }
        }
        if self.constants.windows.is_empty() {
            return Err(bad("constants.windows", "empty"));
        }
        for w in &self.constants.windows {
            Window::new(w[0], w[1]).map_err(|e| bad("constants.windows", e))?;
        }
        if self.constants.pairs_budget == 0 || self.constants.word_samples == 0 {
            return Err(bad("constants", "budgets must be positive"));
        }
        if self.digits.max_bound < 2 {
            return Err(bad("digits.max_bound", "must be at least 2"));
        }
        if self.run.workers == 0 {
            return Err(bad("run.workers", "must be positive"));
        }
        Ok(())
    }

    pub fn group_spec(&self) -> RunResult<GroupSpec> {
        let g = &self.group;
        match g.kind.as_str() {
            "lamplighter" => {
                GroupSpec::lamplighter(g.q.unwrap_or(2)).map_err(|e| bad("group.q", e))
            }
            "bs" => GroupSpec::baumslag_solitar(g.m.ok_or_else(|| bad("group.m", "missing"))?)
                .map_err(|e| bad("group.m", e)),
            "matrix" => {
                let data = g
                    .matrix
                    .clone()
                    .ok_or_else(|| bad("group.matrix", "missing"))?;
                let dim = g.dim.ok_or_else(|| bad("group.dim", "missing"))?;
                let m = IntMatrix::new(dim, data)
                    .ok_or_else(|| bad("group.matrix", format!("expected {dim}x{dim} entries")))?;
                GroupSpec::matrix_module(m).map_err(|e| bad("group.matrix", e))
            }
            other => Err(bad("group.kind", format!("unknown kind `{other}`"))),
        }
    }

    pub fn alphabet(&self) -> RunResult<Alphabet> {
        let spec = self.group_spec()?;
        match self.alphabet.mode.as_str() {
            "standard" => Ok(Alphabet::standard(&spec)),
            "explicit" => {
                let letters = self
                    .alphabet
                    .letters
                    .iter()
                    .map(|l| spec.parse_element(l))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| bad("alphabet.letters", e))?;
                Alphabet::new(&spec, letters).map_err(|e| bad("alphabet.letters", e))
            }
            _ => {
                if matches!(spec, GroupSpec::Lamplighter { .. }) {
                    return Err(bad(
                        "alphabet.mode",
                        "auto-strongly-tlog needs a bs or matrix group",
                    ));
                }
                let (a, _, _) = crate::gensets::build_strongly_tlog(
                    &spec,
                    self.alphabet.max_bound,
                    self.alphabet.budget,
                )?;
                Ok(a)
            }
        }
    }

    pub fn generating_set(&self, alphabet: &Alphabet) -> RunResult<GeneratingSet> {
        let set = match self.genset.kind.as_str() {
            "unbound" => build_unbound_gens(alphabet),
            "bound" => build_bound_gens(alphabet),
            "standard" => build_standard_gens(alphabet),
            _ => build_explicit_gens(alphabet, &self.genset.spellings),
        };
        set.map_err(|e| bad("genset", e))
    }

    pub fn limits(&self) -> BallLimits {
        BallLimits {
            max_elements: self.run.max_elements,
            max_bytes: Some(self.run.mem_cap),
            workers: self.run.workers,
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }
}

/// Writes outputs for one run into the output directory.
struct Sink {
    dir: PathBuf,
    config_toml: String,
    config_json: serde_json::Value,
}

impl Sink {
    fn new(cfg: &ExperimentConfig) -> RunResult<Self> {
        let dir = PathBuf::from(&cfg.run.out);
        fs::create_dir_all(&dir).map_err(|source| RunError::Io {
            path: dir.clone(),
            source,
        })?;
        Ok(Sink {
            dir,
            config_toml: cfg.to_toml(),
            config_json: serde_json::to_value(cfg).expect("config serializes"),
        })
    }

    fn write(&self, name: &str, body: &[u8]) -> RunResult<PathBuf> {
        let path = self.dir.join(name);
        let mut f = fs::File::create(&path).map_err(|source| RunError::Io {
            path: path.clone(),
            source,
        })?;
        f.write_all(body).map_err(|source| RunError::Io {
            path: path.clone(),
            source,
        })?;
        Ok(path)
    }

    /// CSV with the resolved config as `#` comment lines.
    fn csv(&self, name: &str, rows: &str) -> RunResult<PathBuf> {
        let mut out = format!("# format_version = {FORMAT_VERSION}\n");
        for line in self.config_toml.lines() {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
        out.push_str(rows);
        self.write(name, out.as_bytes())
    }

    fn json(&self, name: &str, result: serde_json::Value) -> RunResult<PathBuf> {
        let doc = json!({
            "format_version": FORMAT_VERSION,
            "config": self.config_json,
            "result": result,
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("json");
        text.push('\n');
        self.write(name, text.as_bytes())
    }
}

/// Files written by a command.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outputs {
    pub files: Vec<PathBuf>,
}

fn build_ball(
    cfg: &ExperimentConfig,
    gens: &GeneratingSet,
    radius: u32,
) -> Result<BallIndex<GroupSpec>, Error> {
    BallIndex::build(
        gens.spec().clone(),
        gens.labelled_elements(),
        radius,
        &cfg.limits(),
    )
}

fn sphere_rows(sizes: &[u64]) -> String {
    let mut rows = String::from("r,sphere_size,cumulative\n");
    let mut total = 0;
    for (r, s) in sizes.iter().enumerate() {
        total += s;
        rows.push_str(&format!("{r},{s},{total}\n"));
    }
    rows
}

/// Geodesic of `g` in the ball, with its generator labels and φ-projection.
fn word_dump(
    ball: &BallIndex<GroupSpec>,
    gens: &GeneratingSet,
    g: &GroupElement,
) -> RunResult<serde_json::Value> {
    let Some(path) = ball.geodesic(g) else {
        return Ok(serde_json::Value::Null);
    };
    let labels: Vec<&str> = path.iter().map(|&j| ball.generator(j).0).collect();
    let positions: Vec<usize> = labels
        .iter()
        .map(|l| {
            gens.generators()
                .iter()
                .position(|x| x.label == *l)
                .expect("label of the set")
        })
        .collect();
    let (shift, phi) = gens.phi_project(&positions)?;
    Ok(json!({
        "element": g.to_string(),
        "geodesic": labels,
        "shift": shift,
        "phi": phi,
    }))
}

/// Sphere sizes of one ball. A resource abort still writes the completed
/// spheres before returning the error.
pub fn cmd_ball(cfg: &ExperimentConfig) -> RunResult<Outputs> {
    let alphabet = cfg.alphabet()?;
    let gens = cfg.generating_set(&alphabet)?;
    let sink = Sink::new(cfg)?;
    match build_ball(cfg, &gens, cfg.ball.radius) {
        Ok(ball) => Ok(Outputs {
            files: vec![sink.csv("ball.csv", &sphere_rows(&ball.sphere_sizes()))?],
        }),
        Err(e @ Error::ResourceExhausted { .. }) => {
            if let Error::ResourceExhausted { sphere_sizes, .. } = &e {
                let rows = format!("# aborted: {e}\n{}", sphere_rows(sphere_sizes));
                sink.csv("ball.csv", &rows)?;
            }
            Err(e.into())
        }
        Err(e) => Err(e.into()),
    }
}

/// Dead-end counts and maximal depths, one row per radius.
pub fn cmd_deadends(cfg: &ExperimentConfig) -> RunResult<Outputs> {
    let alphabet = cfg.alphabet()?;
    let gens = cfg.generating_set(&alphabet)?;
    let sink = Sink::new(cfg)?;
    let mut rows = String::from("r,count,max_depth\n");
    let mut dumps = Vec::new();
    let mut outcome = Ok(());
    for &radius in &cfg.deadends.radii {
        let ball = match build_ball(cfg, &gens, radius) {
            Ok(b) => b,
            Err(e) => {
                rows.push_str(&format!("# radius {radius} aborted: {e}\n"));
                outcome = Err(e);
                break;
            }
        };
        let dead = ball.dead_ends(cfg.deadends.depth_cap);
        let max = dead.iter().map(|d| d.depth).max();
        let max = max.map(|d| d.to_string()).unwrap_or_default();
        rows.push_str(&format!("{radius},{},{max}\n", dead.len()));
        if cfg.run.dump_words {
            for d in &dead {
                let mut w = word_dump(&ball, &gens, &d.element)?;
                w["radius"] = json!(radius);
                w["depth"] = json!(d.depth.to_string());
                dumps.push(w);
            }
        }
    }
    let mut files = vec![sink.csv("deadends.csv", &rows)?];
    if cfg.run.dump_words {
        files.push(sink.json("deadends_words.json", json!(dumps))?);
    }
    outcome?;
    Ok(Outputs { files })
}

/// `ℓ(r)` for each configured level.
pub fn cmd_acx(cfg: &ExperimentConfig) -> RunResult<Outputs> {
    let alphabet = cfg.alphabet()?;
    let gens = cfg.generating_set(&alphabet)?;
    let sink = Sink::new(cfg)?;
    let ball = build_ball(cfg, &gens, cfg.acx.radius)?;
    let mut rows = String::from("r,ell,pairs\n");
    let mut dumps = Vec::new();
    for &r in &cfg.acx.levels {
        let level = ball.acx_check(r, cfg.acx.pair_distance_cap)?;
        let ell = level
            .max_interior
            .map(|d| d.to_string())
            .unwrap_or_default();
        rows.push_str(&format!("{r},{ell},{}\n", level.pair_count));
        if cfg.run.dump_words {
            for (a, b, d) in &level.worst_pairs {
                dumps.push(json!({
                    "r": r,
                    "interior_distance": d,
                    "first": word_dump(&ball, &gens, a)?,
                    "second": word_dump(&ball, &gens, b)?,
                }));
            }
        }
    }
    let mut files = vec![sink.csv("acx.csv", &rows)?];
    if cfg.run.dump_words {
        files.push(sink.json("acx_words.json", json!(dumps))?);
    }
    Ok(Outputs { files })
}

fn witness_letter(cfg: &ExperimentConfig, alphabet: &Alphabet) -> RunResult<ModuleElement> {
    if cfg.witness.letter.is_empty() {
        let i = alphabet
            .nonzero_indices()
            .next()
            .ok_or_else(|| bad("alphabet", "no nonzero letter"))?;
        Ok(alphabet.letter(i).clone())
    } else {
        alphabet
            .spec()
            .parse_element(&cfg.witness.letter)
            .map_err(|e| bad("witness.letter", e))
    }
}

/// Witness measurements as JSON.
pub fn cmd_witness(cfg: &ExperimentConfig) -> RunResult<Outputs> {
    let alphabet = cfg.alphabet()?;
    let sink = Sink::new(cfg)?;
    let w = &cfg.witness;
    let mut results = Vec::new();
    if w.family == "kn" {
        for &n in &w.n {
            let k = bs_kn(alphabet.spec(), n)?;
            let params = KnParams {
                n,
                i: w.kn_i,
                j: w.kn_j,
                length_cap: n + 3,
                window: Window::new(-2, n as i64 + 2)?,
                node_budget: None,
            };
            results.push(
                serde_json::to_value(check_kn_condition(&alphabet, &k, params)?).expect("json"),
            );
        }
        return Ok(Outputs {
            files: vec![sink.json("witness.json", json!(results))?],
        });
    }
    let gens = cfg.generating_set(&alphabet)?;
    let a = witness_letter(cfg, &alphabet)?;
    let ball = build_ball(cfg, &gens, w.radius)?;
    let s = gens.max_shift_generator().element.clone();
    for &n in &w.n {
        let reports = if w.family == "deep" {
            vec![measure_deep(&ball, n, &a, w.depth_cap)?]
        } else {
            w.j.iter()
                .filter(|&&j| j <= n)
                .map(|&j| measure_acx(&ball, n, j, &s, &a))
                .collect::<Result<Vec<_>, _>>()?
        };
        for report in reports {
            let mut v = serde_json::to_value(&report).expect("json");
            if cfg.run.dump_words {
                let mut words = BTreeMap::new();
                for (name, _, blob) in &report.elements {
                    let g = GroupElement::from_blob(blob).expect("blob written by this crate");
                    words.insert(name.clone(), word_dump(&ball, &gens, &g)?);
                }
                v["words"] = json!(words);
            }
            results.push(v);
        }
    }
    Ok(Outputs {
        files: vec![sink.json("witness.json", json!(results))?],
    })
}

/// Constant estimates as JSON.
pub fn cmd_constants(cfg: &ExperimentConfig) -> RunResult<Outputs> {
    let alphabet = cfg.alphabet()?;
    let sink = Sink::new(cfg)?;
    let c = &cfg.constants;
    let params = ConstantsParams {
        windows: c
            .windows
            .iter()
            .map(|w| Window { lo: w[0], hi: w[1] })
            .collect(),
        length_cap: c.length_cap,
        margin: c.margin,
        pairs_budget: c.pairs_budget,
        word_samples: c.word_samples,
        seed: c.seed,
    };
    let est = estimate_constants(&alphabet, &params)?;
    Ok(Outputs {
        files: vec![sink.json("constants.json", serde_json::to_value(&est).expect("json"))?],
    })
}

/// Digit-bound search; the checks of every tried bound are written even
/// when no bound passes.
pub fn cmd_digits(cfg: &ExperimentConfig) -> RunResult<Outputs> {
    let spec = cfg.group_spec()?;
    if matches!(spec, GroupSpec::Lamplighter { .. }) {
        return Err(bad("group.kind", "digit systems need a bs or matrix group"));
    }
    let sink = Sink::new(cfg)?;
    let mut checks = Vec::new();
    let mut found = None;
    for n in 2..=cfg.digits.max_bound {
        let check = find_digit_bound(&spec, n, cfg.digits.budget)?;
        let pass = check.pass;
        checks.push(check);
        if pass {
            found = Some(n);
            break;
        }
    }
    let letters = match found {
        Some(n) => DigitSystem::new(&spec, n)?
            .alphabet()
            .letters()
            .iter()
            .map(ToString::to_string)
            .collect(),
        None => Vec::new(),
    };
    let file = sink.json(
        "digits.json",
        json!({ "n": found, "letters": letters, "checks": checks }),
    )?;
    match found {
        Some(_) => Ok(Outputs { files: vec![file] }),
        None => Err(Error::BoundSearchExhausted {
            max_bound: cfg.digits.max_bound,
        }
        .into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_round_trip() {
        let cfg = ExperimentConfig::parse("").unwrap();
        let again = ExperimentConfig::parse(&cfg.to_toml()).unwrap();
        assert_eq!(cfg, again);
    }

    #[test]
    fn field_named_in_errors() {
        let e = ExperimentConfig::parse("[group]\nkind = \"bs\"\n").unwrap_err();
        assert!(e.to_string().contains("group.m"), "{e}");
        assert_eq!(e.exit_code(), 1);
        let e = ExperimentConfig::parse("[ball]\nradius = \"x\"\n").unwrap_err();
        assert!(e.to_string().contains("radius"), "{e}");
        let e = ExperimentConfig::parse("[bal]\nradius = 2\n").unwrap_err();
        assert!(e.to_string().contains("bal"), "{e}");
    }

    #[test]
    fn exit_codes() {
        let abort = RunError::from(Error::ResourceExhausted {
            stored: 1,
            completed_radius: 0,
            sphere_sizes: vec![1],
        });
        assert_eq!(abort.exit_code(), 2);
        assert_eq!(
            RunError::from(Error::BoundSearchExhausted { max_bound: 3 }).exit_code(),
            3
        );
    }
}
