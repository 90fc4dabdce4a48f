//! Flag definitions and their translation into core game objects.

use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use labelgames::games::{
    Bias, Convention, GameSpec, GoalId, LegalityScope, Player, RepeatPolicy, Variant, WeightFn,
};
use labelgames::graph::{
    distance_matrix, generate, graph_from_graph6, with_isolated, Graph, GraphFamily,
};
use labelgames::solver::{SolveLimits, SolveOptions};

#[derive(Parser)]
#[command(
    name = "labelgames",
    version,
    about = "Exact solver and analysis toolkit for two-player graph labeling games"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Solve games to their perfect-play winner
    Solve(SolveArgs),
    /// Sweep label ceilings and report the least one Alice wins with
    Span(SpanArgs),
    /// Run the built-in suite of known-winner propositions
    Verify(VerifyArgs),
    /// Tabulate minimal distance-game spans against the reference estimate
    Trend(TrendArgs),
    /// Print graphs as graph6 lines
    Gen(GenArgs),
    /// Play a game against the engine at the terminal
    Play(PlayArgs),
}

/// Where the graph comes from; exactly one source must be given.
#[derive(Args)]
pub struct GraphArgs {
    /// Graph as a graph6 string
    #[arg(long, value_name = "G6")]
    graph6: Option<String>,
    /// File with one graph6 line per graph; blank lines are skipped
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    /// Generated family: path|cycle|star|complete N, or complete-bipartite P Q
    #[arg(long, value_name = "FAMILY N..", num_args = 2..=3)]
    gen: Option<Vec<String>>,
    /// Extra isolated vertices appended to every loaded graph
    #[arg(long, value_name = "K", default_value_t = 0)]
    isolated: usize,
}

impl GraphArgs {
    /// True when the source may carry several graphs, so reports should
    /// always be arrays.
    pub fn is_batch(&self) -> bool {
        self.file.is_some()
    }

    pub fn load(&self) -> Result<Vec<Graph>> {
        let sources =
            u8::from(self.graph6.is_some()) + u8::from(self.file.is_some()) + u8::from(self.gen.is_some());
        if sources != 1 {
            bail!("exactly one graph source is required: --graph6, --file, or --gen");
        }
        let mut graphs = if let Some(text) = &self.graph6 {
            vec![graph_from_graph6(text)?]
        } else if let Some(path) = &self.file {
            let body = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            let mut graphs = Vec::new();
            for (i, line) in body.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                graphs.push(
                    graph_from_graph6(line)
                        .with_context(|| format!("{} line {}", path.display(), i + 1))?,
                );
            }
            if graphs.is_empty() {
                bail!("{} holds no graph6 lines", path.display());
            }
            graphs
        } else {
            let parts = self.gen.as_ref().expect("one source is set");
            let family = GraphFamily::parse(&parts[0]).ok_or_else(|| {
                anyhow!(
                    "unknown graph family {:?}; use path, cycle, star, complete, or complete-bipartite",
                    parts[0]
                )
            })?;
            let params: Vec<usize> = parts[1..]
                .iter()
                .map(|p| {
                    p.parse::<usize>()
                        .map_err(|_| anyhow!("graph parameter {p:?} is not a whole number"))
                })
                .collect::<Result<_>>()?;
            vec![generate(family, &params, 0)?]
        };
        if self.isolated > 0 {
            graphs = graphs.iter().map(|g| with_isolated(g, self.isolated)).collect();
        }
        Ok(graphs)
    }

    pub fn load_one(&self, what: &str) -> Result<Graph> {
        let mut graphs = self.load()?;
        if graphs.len() != 1 {
            bail!("{what} works on exactly one graph, got {}", graphs.len());
        }
        Ok(graphs.pop().expect("length checked"))
    }
}

/// The constraint family and its variant-specific knobs.
#[derive(Args)]
pub struct VariantArgs {
    /// Constraint family
    #[arg(long, value_enum)]
    variant: VariantName,
    /// dist only: labels across an edge differ by at least d, labels at
    /// distance two differ — the constraint tuple (d, 1)
    #[arg(long, conflicts_with_all = ["j", "radio"])]
    d: Option<u32>,
    /// dist only: full non-increasing constraint tuple, comma separated
    #[arg(long, value_delimiter = ',', conflicts_with = "radio")]
    j: Option<Vec<u32>>,
    /// dist only: tuple (D, D-1, .., 1) with D the graph diameter
    #[arg(long)]
    radio: bool,
    /// adj-weight only: weight of a full edge from its endpoint labels
    #[arg(long, value_enum)]
    weight_fn: Option<WeightFnName>,
    /// adj-weight only: least distance between equal labels (0 or 3)
    #[arg(long, value_name = "DIST")]
    min_repeat_distance: Option<u32>,
}

impl VariantArgs {
    pub fn build(&self, g: &Graph) -> Result<Variant> {
        if self.variant != VariantName::Dist && (self.d.is_some() || self.j.is_some() || self.radio)
        {
            bail!("--d, --j, and --radio apply only to --variant dist");
        }
        if self.variant != VariantName::AdjWeight
            && (self.weight_fn.is_some() || self.min_repeat_distance.is_some())
        {
            bail!("--weight-fn and --min-repeat-distance apply only to --variant adj-weight");
        }
        Ok(match self.variant {
            VariantName::VmEdge => Variant::VmEdge,
            VariantName::VmTotal => Variant::VmTotal,
            VariantName::EdgeDiff => Variant::EdgeDiff,
            VariantName::EdgeSum => Variant::EdgeSum,
            VariantName::AdjWeight => Variant::AdjWeight {
                weight_fn: self.weight_fn.unwrap_or(WeightFnName::Sum).into(),
                min_repeat_distance: self.min_repeat_distance.unwrap_or(0),
            },
            VariantName::Dist => {
                let constraints = if self.radio {
                    let dm = distance_matrix(g);
                    if !dm.is_connected() {
                        bail!("the radio game needs a connected graph with a finite diameter");
                    }
                    (1..=dm.diameter().unwrap_or(0)).rev().collect()
                } else if let Some(tuple) = &self.j {
                    if tuple.is_empty() {
                        bail!("--j needs at least one entry");
                    }
                    tuple.clone()
                } else if let Some(d) = self.d {
                    vec![d, 1]
                } else {
                    bail!("dist games need --d, --j, or --radio");
                };
                Variant::Dist { constraints }
            }
        })
    }
}

/// Everything that pins down one game besides the graph.
#[derive(Args)]
pub struct SpecArgs {
    #[command(flatten)]
    variant: VariantArgs,
    /// Largest label; the smallest is 0 for dist games and 1 otherwise.
    /// Defaults: vm-edge m, vm-total n+m, edge-diff m+1, edge-sum n,
    /// adj-weight n; dist games need it spelled out
    #[arg(long, allow_negative_numbers = true)]
    s: Option<i32>,
    /// Winning convention
    #[arg(long, value_enum, default_value_t = ConventionName::MakerBreaker)]
    convention: ConventionName,
    /// Move schedule A:B — A consecutive moves by the first player, then
    /// B by the other, repeating
    #[arg(long, default_value = "1:1", value_parser = parse_bias)]
    bias: Bias,
    /// Which player moves first
    #[arg(long, value_enum, default_value_t = PlayerName::Alice)]
    first: PlayerName,
    /// Which side the labeling constraints bind
    #[arg(long, value_enum, default_value_t = ScopeName::Both)]
    scope: ScopeName,
    /// Label reuse policy; each variant admits exactly one, so this can
    /// only restate it
    #[arg(long, value_enum)]
    repeat_policy: Option<RepeatPolicyName>,
}

impl SpecArgs {
    pub fn build(&self, g: &Graph) -> Result<GameSpec> {
        let variant = self.variant.build(g)?;
        let label_lo = if matches!(variant, Variant::Dist { .. }) { 0 } else { 1 };
        let label_hi = match self.s {
            Some(s) => s,
            None => default_hi(&variant, g)?,
        };
        let repeat_policy = self
            .repeat_policy
            .map(RepeatPolicy::from)
            .unwrap_or_else(|| variant.required_repeat_policy());
        let spec = GameSpec {
            variant,
            label_lo,
            label_hi,
            repeat_policy,
            convention: self.convention.into(),
            bias: self.bias,
            first_player: self.first.into(),
            legality_scope: self.scope.into(),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn default_hi(variant: &Variant, g: &Graph) -> Result<i32> {
    let hi = match variant {
        Variant::VmEdge => g.m(),
        Variant::VmTotal => g.n() + g.m(),
        Variant::EdgeDiff => g.m() + 1,
        Variant::EdgeSum | Variant::AdjWeight { .. } => g.n(),
        Variant::Dist { .. } => {
            bail!("dist games have no default --s; pass the largest label explicitly")
        }
    };
    i32::try_from(hi).context("graph too large to derive a label ceiling")
}

fn parse_bias(text: &str) -> Result<Bias, String> {
    let parts: Vec<&str> = text.split(':').collect();
    if let [a, b] = parts[..] {
        if let (Ok(a), Ok(b)) = (a.parse(), b.parse()) {
            return Ok(Bias { a, b });
        }
    }
    Err(format!("bias must look like 2:1, got {text:?}"))
}

/// Resource limits; flags override the environment variables.
#[derive(Args)]
pub struct LimitArgs {
    /// Node budget per solve; past it the instance stays unsolved
    #[arg(long, value_name = "N", env = "LABELGAMES_MAX_NODES")]
    max_nodes: Option<u64>,
    /// Time budget per solve, in seconds
    #[arg(long, value_name = "SECS", env = "LABELGAMES_MAX_SECONDS")]
    max_seconds: Option<f64>,
}

impl LimitArgs {
    pub fn limits(&self) -> SolveLimits {
        SolveLimits {
            max_nodes: self.max_nodes,
            max_seconds: self.max_seconds,
        }
    }
}

#[derive(Args)]
pub struct RunArgs {
    #[command(flatten)]
    limits: LimitArgs,
    /// Exploit graph symmetry in the solver
    #[arg(long, value_enum, default_value_t = Toggle::On)]
    symmetry: Toggle,
}

impl RunArgs {
    pub fn options(&self) -> SolveOptions {
        SolveOptions {
            symmetry: self.symmetry == Toggle::On,
            limits: self.limits.limits(),
        }
    }
}

#[derive(Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub spec: SpecArgs,
    #[command(flatten)]
    pub run: RunArgs,
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args)]
pub struct SpanArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub variant: VariantArgs,
    /// Smallest label ceiling to try
    #[arg(long, allow_negative_numbers = true)]
    pub s_min: i32,
    /// Largest label ceiling to try
    #[arg(long, allow_negative_numbers = true)]
    pub s_max: i32,
    #[command(flatten)]
    pub run: RunArgs,
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub limits: LimitArgs,
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args)]
pub struct TrendArgs {
    /// Gaps d to tabulate, comma separated
    #[arg(long, value_delimiter = ',', default_value = "1,2")]
    pub d: Vec<u32>,
    /// Largest graph order in the table
    #[arg(long, default_value_t = 3)]
    pub n_max: usize,
    #[command(flatten)]
    pub run: RunArgs,
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// text prints bare graph6 lines; json adds names and sizes
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args)]
pub struct PlayArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub spec: SpecArgs,
    #[command(flatten)]
    pub run: RunArgs,
    /// Which side the human plays
    #[arg(long, value_enum, default_value_t = PlayerName::Alice)]
    pub seat: PlayerName,
}

impl PlayArgs {
    pub fn build(&self) -> Result<(Graph, GameSpec, SolveOptions, Player)> {
        let g = self.graph.load_one("play")?;
        let spec = self.spec.build(&g)?;
        Ok((g, spec, self.run.options(), self.seat.into()))
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Toggle {
    On,
    Off,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum VariantName {
    VmEdge,
    VmTotal,
    Dist,
    EdgeDiff,
    EdgeSum,
    AdjWeight,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum WeightFnName {
    Sum,
    #[value(name = "absdiff")]
    AbsDiff,
}

impl From<WeightFnName> for WeightFn {
    fn from(w: WeightFnName) -> WeightFn {
        match w {
            WeightFnName::Sum => WeightFn::Sum,
            WeightFnName::AbsDiff => WeightFn::AbsDiff,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ConventionName {
    Achievement,
    Avoidance,
    MakerBreaker,
    GoalGame,
}

impl From<ConventionName> for Convention {
    fn from(c: ConventionName) -> Convention {
        match c {
            ConventionName::Achievement => Convention::Achievement,
            ConventionName::Avoidance => Convention::Avoidance,
            ConventionName::MakerBreaker => Convention::MakerBreaker,
            ConventionName::GoalGame => Convention::GoalGame {
                goal_id: GoalId::NoForbiddenSum,
            },
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum PlayerName {
    Alice,
    Bob,
}

impl From<PlayerName> for Player {
    fn from(p: PlayerName) -> Player {
        match p {
            PlayerName::Alice => Player::Alice,
            PlayerName::Bob => Player::Bob,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ScopeName {
    Both,
    AliceOnly,
    BobOnly,
}

impl From<ScopeName> for LegalityScope {
    fn from(s: ScopeName) -> LegalityScope {
        match s {
            ScopeName::Both => LegalityScope::Both,
            ScopeName::AliceOnly => LegalityScope::AliceOnly,
            ScopeName::BobOnly => LegalityScope::BobOnly,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum RepeatPolicyName {
    NoRepeats,
    RepeatsAllowed,
}

impl From<RepeatPolicyName> for RepeatPolicy {
    fn from(r: RepeatPolicyName) -> RepeatPolicy {
        match r {
            RepeatPolicyName::NoRepeats => RepeatPolicy::NoRepeats,
            RepeatPolicyName::RepeatsAllowed => RepeatPolicy::RepeatsAllowed,
        }
    }
}
