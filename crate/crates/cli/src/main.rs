use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rootgroups::autom::AutCaps;
use rootgroups::chevalley::{BuildOptions, DEFAULT_ENUMERATION_CAP};
use rootgroups::grptool::{Ambient, SubgroupExpr};
use rootgroups::lemmas::{self, LemmaOptions};
use rootgroups::radenum::{classify_rc, EnumOptions, SubgroupCatalog, DEFAULT_SUBGROUP_CAP};
use rootgroups::report::{self, ConstructReport, SubgroupReport, SuiteReport};
use rootgroups::{Error, Exec, Family, GroupTable};

#[derive(Parser, Debug)]
#[command(name = "rootgroups", version, about = "Sylow subgroups of G2(q) and PSU4(q) from root-group commutator tables")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct RunConfig {
    #[arg(long, global = true, env = "ROOTGROUPS_FAMILY", default_value = "g2")]
    family: Family,
    #[arg(long, global = true, env = "ROOTGROUPS_Q", default_value_t = 2)]
    q: u32,
    /// Coefficients of the GF(q) modulus, lowest degree first, e.g. 1,1,1
    #[arg(long, global = true, env = "ROOTGROUPS_MODULUS", value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
    #[arg(long, global = true, env = "ROOTGROUPS_OUT", value_enum, default_value_t = Format::Json)]
    out: Format,
    /// Directory for cached group tables.
    #[arg(long, global = true, env = "ROOTGROUPS_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Worker threads; 1 runs every scan sequentially. Defaults to the available parallelism.
    #[arg(long, global = true, env = "ROOTGROUPS_THREADS", value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,
    #[arg(long, global = true, env = "ROOTGROUPS_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, env = "ROOTGROUPS_MAX_ELEMENTS", default_value_t = DEFAULT_ENUMERATION_CAP,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_elements: u64,
    #[arg(long, global = true, env = "ROOTGROUPS_MAX_AUT_ORDER", default_value_t = AutCaps::default().max_order,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_aut_order: u64,
    #[arg(long, global = true, env = "ROOTGROUPS_MAX_SEARCH_NODES", default_value_t = AutCaps::default().max_nodes,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_search_nodes: u64,
    /// Report incomplete enumerations instead of failing with a resource error.
    #[arg(long, global = true, env = "ROOTGROUPS_ALLOW_PARTIAL")]
    allow_partial: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    #[value(alias = "markdown")]
    Md,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build (or load) the group table and summarise it.
    Construct {
        /// Random triples for the associativity spot check.
        #[arg(long, default_value_t = 1000)]
        samples: u64,
    },
    /// Run lemma checks.
    Verify {
        /// Lemma id, or `all`.
        #[arg(long, required_unless_present = "all")]
        lemma: Option<String>,
        #[arg(long, conflicts_with = "lemma")]
        all: bool,
    },
    /// Enumerate subgroups and classify the S-centric, S-radical ones.
    EnumerateRc {
        #[arg(long, env = "ROOTGROUPS_MAX_SUBGROUPS", default_value_t = DEFAULT_SUBGROUP_CAP)]
        max_subgroups: usize,
        /// Decide radicality from O_p(Aut(E)) alone, without the short cuts.
        #[arg(long)]
        full_radical: bool,
    },
    /// Describe the subgroup named by a recipe such as `C(roots(3a+b, 3a+2b))`.
    Dump {
        #[arg(long)]
        recipe: String,
    },
    /// Print the root datum and commutator rules.
    Datum,
}

struct Outcome {
    text: String,
    code: u8,
}

const PASS: u8 = 0;
const FAIL: u8 = 1;
const USAGE: u8 = 2;
const RESOURCE: u8 = 3;

fn error_code(e: &Error) -> u8 {
    match e {
        Error::Resource(_) => RESOURCE,
        _ => USAGE,
    }
}

impl RunConfig {
    fn build_options(&self) -> BuildOptions {
        BuildOptions { modulus: self.modulus.clone(), ..BuildOptions::default() }
    }

    fn aut_caps(&self) -> AutCaps {
        AutCaps { max_order: self.max_aut_order, max_nodes: self.max_search_nodes }
    }

    fn exec(&self) -> Exec {
        if self.threads == Some(1) {
            Exec::Sequential
        } else {
            Exec::default()
        }
    }

    fn table(&self) -> rootgroups::Result<GroupTable> {
        match &self.cache_dir {
            Some(dir) => {
                let (t, hit) = GroupTable::load_or_build(dir, self.family, self.q, self.build_options())?;
                eprintln!("group table {}", if hit { "loaded from cache" } else { "built and cached" });
                Ok(t)
            }
            None => GroupTable::build_with(self.family, self.q, self.build_options()),
        }
    }

    fn ambient(&self) -> rootgroups::Result<Ambient> {
        Ambient::with_options(self.table()?, self.exec(), self.max_elements)
    }

    fn render<T: serde::Serialize>(&self, command: &str, body: &T, md: impl FnOnce(&T) -> String) -> String {
        match self.out {
            Format::Json => report::to_json(command, body),
            Format::Md => md(body),
        }
    }
}

fn construct(cfg: &RunConfig, samples: u64) -> rootgroups::Result<Outcome> {
    let g = cfg.ambient()?;
    let r = ConstructReport::compute(&g, samples, cfg.seed);
    let code = if r.ok() { PASS } else { FAIL };
    Ok(Outcome { text: cfg.render("construct", &r, ConstructReport::to_markdown), code })
}

fn verify(cfg: &RunConfig, lemma: Option<&str>) -> rootgroups::Result<Outcome> {
    let selected = match lemma {
        Some(id) if !id.eq_ignore_ascii_case("all") => Some(lemmas::lookup(id, cfg.family)?),
        _ => None,
    };
    let g = cfg.ambient()?;
    let opts = LemmaOptions { aut: cfg.aut_caps() };
    let results = match selected {
        Some(l) => vec![lemmas::verify(l, &g, &opts)?],
        None => lemmas::verify_all(&g, &opts),
    };
    let r = SuiteReport::new(cfg.family.name(), cfg.q, results);
    let code = if r.ok() { PASS } else { FAIL };
    Ok(Outcome { text: cfg.render("verify", &r, SuiteReport::to_markdown), code })
}

fn enumerate_rc(cfg: &RunConfig, max_subgroups: usize, full_radical: bool) -> rootgroups::Result<Outcome> {
    match cfg.q {
        2 => {}
        3 if cfg.allow_partial => {}
        3 => return Err(Error::Usage("enumeration at q = 3 is best effort and needs --allow-partial".into())),
        q => return Err(Error::Usage(format!("subgroup enumeration is supported for q = 2 (and q = 3 with --allow-partial), not q = {q}"))),
    }
    let g = cfg.ambient()?;
    let opts = EnumOptions { subgroup_cap: max_subgroups, aut: cfg.aut_caps(), fast: !full_radical };
    let catalog = SubgroupCatalog::build(&g, opts);
    let r = classify_rc(&g, &catalog);
    let code = if !r.summary.complete && !cfg.allow_partial {
        RESOURCE
    } else if cfg.q != 2 || r.matches {
        PASS
    } else {
        FAIL
    };
    Ok(Outcome { text: cfg.render("enumerate-rc", &r, |r| r.to_markdown()), code })
}

fn dump(cfg: &RunConfig, recipe: &str) -> rootgroups::Result<Outcome> {
    let expr = SubgroupExpr::parse(recipe)?;
    let g = cfg.ambient()?;
    let h = expr.eval(&g)?;
    let r = SubgroupReport::compute(&g, &expr, &h);
    Ok(Outcome { text: cfg.render("dump", &r, SubgroupReport::to_markdown), code: PASS })
}

fn datum(cfg: &RunConfig) -> rootgroups::Result<Outcome> {
    let t = cfg.table()?;
    let body = t.datum_json();
    let text = match cfg.out {
        Format::Json => report::to_json("datum", &body),
        Format::Md => format!("```json\n{}\n```\n", serde_json::to_string_pretty(&body).expect("datum serialises")),
    };
    Ok(Outcome { text, code: PASS })
}

fn configure_threads(cfg: &RunConfig) {
    #[cfg(feature = "parallel")]
    if let Some(n) = cfg.threads {
        // Only fails if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n as usize).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = cfg;
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { PASS });
        }
    };
    let cfg = &cli.config;
    configure_threads(cfg);
    let result = match &cli.command {
        Command::Construct { samples } => construct(cfg, *samples),
        Command::Verify { lemma, .. } => verify(cfg, lemma.as_deref()),
        Command::EnumerateRc { max_subgroups, full_radical } => enumerate_rc(cfg, *max_subgroups, *full_radical),
        Command::Dump { recipe } => dump(cfg, recipe),
        Command::Datum => datum(cfg),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("rootgroups: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}
