//! Command-line front end: construct catalogued families, verify design
//! files by exhaustive counting, analyze subsets of groups, run the
//! GF(2) code analytics, and regenerate the built-in catalogues.
//!
//! Exit codes: 0 when every claim checked in the run is confirmed, 1 when
//! any claim is refuted, 2 on usage or input errors.

mod design_file;
mod groupspec;
mod parallel;
mod report;
mod tables;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use adesign_core::constructions::{
    augment_dual_adesign, development_construction, exchange_dual_adesign, mixed_union_family,
    pair_union_3adesign, qr_3adesign, qr_log_adesign, qr_pair_design, qr_restriction_adesign,
    qr_restriction_complement_adesign, quartic_even_family, quartic_union_family, Construction,
    MixedCase,
};
use adesign_core::diffana::{difference_profile, is_paley_type, lift_to_z2, Classification};
use adesign_core::gf2codes::{
    dual_distance_lower_bound, gram_rank_gf2, gram_rank_rational, incidence_matrix, min_distance,
    rank_gf2, self_orthogonality_report, DEFAULT_DIM_CAP,
};
use adesign_core::groupalg::Group;
use adesign_core::incidence::{
    covering_rank_bound, packing_bound, IncidenceStructure, Ratio, Verdict,
    DEFAULT_ENUMERATION_CAP,
};

use design_file::{read_design, write_design};
use groupspec::{parse_elements, parse_group};
use report::{print_claim, print_plain_blocks, print_profile, RunReport};

#[derive(Debug)]
pub struct CliError {
    msg: String,
}

impl CliError {
    pub fn new(msg: String) -> CliError {
        CliError { msg }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.msg)
    }
}

impl std::error::Error for CliError {}

impl From<adesign_core::constructions::ConsError> for CliError {
    fn from(e: adesign_core::constructions::ConsError) -> Self {
        CliError::new(e.to_string())
    }
}

impl From<adesign_core::incidence::IncError> for CliError {
    fn from(e: adesign_core::incidence::IncError) -> Self {
        CliError::new(e.to_string())
    }
}

impl From<adesign_core::diffana::DiffError> for CliError {
    fn from(e: adesign_core::diffana::DiffError) -> Self {
        CliError::new(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "adesign",
    about = "Construct, verify and analyze two-level designs and their binary codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Cap on subset-block containment tests (env ADESIGN_CAP also read).
    #[arg(long, global = true)]
    cap: Option<u64>,
    /// Worker threads for level profiles (0 = choose automatically).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Build a catalogued family and verify its claimed parameters.
    Construct {
        /// qr-log | qr-restrict | qr-restrict-complement | quartic-odd |
        /// quartic-even | mixed | qr-pair-design | augment-dual |
        /// exchange-dual | qr-3adesign | pair-union-3adesign | dev
        family: String,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        /// Mixed-union case (1, 2 or 3).
        #[arg(long)]
        case: Option<u8>,
        /// Class index set for mixed case 3, e.g. 0,1.
        #[arg(long = "I")]
        index_set: Option<String>,
        /// Group for the dev family, e.g. z13 or gf9.
        #[arg(long)]
        group: Option<String>,
        /// Subset elements for the dev family, e.g. 1,3,4,9,10,12.
        #[arg(long)]
        set: Option<String>,
        /// Base design file for augment-dual / exchange-dual.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Block indices for augment-dual, e.g. 0,1,2.
        #[arg(long)]
        blocks: Option<String>,
        /// Block index for exchange-dual.
        #[arg(long)]
        block: Option<usize>,
        /// Write the design file here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also print the block table with point labels.
        #[arg(long)]
        plain: bool,
    },
    /// Exhaustively compute the t-level profile of a design file.
    Verify {
        file: PathBuf,
        #[arg(long)]
        t: usize,
        /// Claimed parameters t,v,k,lambda to compare against.
        #[arg(long)]
        claim: Option<String>,
        #[arg(long)]
        plain: bool,
    },
    /// Difference-level analysis of a subset of a group.
    Analyze {
        #[arg(long)]
        group: String,
        #[arg(long)]
        set: String,
        /// Adjoined base-group elements: analyze the lift of the set into
        /// Z2 x G with these elements on the odd layer.
        #[arg(long)]
        lift: Option<String>,
    },
    /// GF(2) code analytics of a design file.
    Code {
        file: PathBuf,
        /// Analyze the all-ones-column extension of the incidence matrix.
        #[arg(long)]
        extend: bool,
    },
    /// Regenerate a built-in catalogue (1: families, 2: code bounds).
    Tables {
        #[arg(long)]
        which: u8,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn resolve_cap(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("ADESIGN_CAP")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_ENUMERATION_CAP)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let cap = resolve_cap(cli.cap);
    let jobs = cli.jobs;
    match cli.command {
        Command::Construct {
            family,
            q,
            p,
            n,
            case,
            index_set,
            group,
            set,
            input,
            blocks,
            block,
            out,
            plain,
        } => {
            let mut report = RunReport::begin();
            let construction = build_family(
                &family, q, p, n, case, index_set, group, set, input, blocks, block,
            )?;
            print_claim(&construction.claim);
            report.note_status(&construction.claim.status);
            if plain {
                println!("blocks:");
                print_plain_blocks(&construction.structure);
            }
            if let Some(path) = out {
                let body = write_design(&path, &construction.structure)?;
                report.digest("output", body.as_bytes());
                println!("wrote design file: {}", path.display());
            }
            Ok(report.finish())
        }
        Command::Verify { file, t, claim, plain } => {
            let mut report = RunReport::begin();
            let (structure, bytes) = read_design(&file)?;
            report.digest("input", &bytes);
            let profile = parallel::profile(&structure, t, cap, jobs)?;
            print_profile(&structure, &profile);
            if plain {
                println!("blocks:");
                print_plain_blocks(&structure);
            }
            if let Some(text) = claim {
                let (ct, cv, ck, clambda) = parse_claim(&text)?;
                if ct != t {
                    return Err(CliError::new(format!(
                        "claim t = {ct} disagrees with --t {t}"
                    )));
                }
                let k = structure.uniform_block_size().map(|k| k as u64);
                let lambda_matches = match profile.verdict {
                    Verdict::TDesign { lambda } | Verdict::TAdesign { lambda } => {
                        lambda == clambda
                    }
                    Verdict::MultiLevel { .. } => false,
                };
                let confirmed =
                    structure.v() as u64 == cv && k == Some(ck) && lambda_matches;
                println!(
                    "claim {ct}-({cv}, {ck}, {clambda}): {}",
                    if confirmed { "CONFIRMED" } else { "REFUTED" }
                );
                if !confirmed {
                    report.flag_refuted();
                }
            }
            Ok(report.finish())
        }
        Command::Analyze { group, set, lift } => {
            let report = RunReport::begin();
            let g = parse_group(&group)?;
            let elements = parse_elements(&set)?;
            report.digest("input", format!("{group} {elements:?}").as_bytes());
            match lift {
                None => analyze_subset(&g, &elements)?,
                Some(adjoined) => {
                    let adjoined = parse_elements(&adjoined)?;
                    analyze_lift(&g, &elements, &adjoined)?;
                }
            }
            Ok(report.finish())
        }
        Command::Code { file, extend } => {
            let report = RunReport::begin();
            let (structure, bytes) = read_design(&file)?;
            report.digest("input", &bytes);
            code_report(&structure, extend, cap, jobs)?;
            Ok(report.finish())
        }
        Command::Tables { which } => {
            let mut report = RunReport::begin();
            tables::run_table(which, &mut report)?;
            Ok(report.finish())
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn build_family(
    family: &str,
    q: Option<u64>,
    p: Option<u64>,
    n: Option<u64>,
    case: Option<u8>,
    index_set: Option<String>,
    group: Option<String>,
    set: Option<String>,
    input: Option<PathBuf>,
    blocks: Option<String>,
    block: Option<usize>,
) -> Result<Construction, CliError> {
    let need_q = || q.ok_or_else(|| CliError::new(format!("family {family} needs --q")));
    let need_p = || p.ok_or_else(|| CliError::new(format!("family {family} needs --p")));
    let base_design = |input: &Option<PathBuf>| -> Result<IncidenceStructure, CliError> {
        let path = input
            .as_ref()
            .ok_or_else(|| CliError::new(format!("family {family} needs --in FILE")))?;
        Ok(read_design(path)?.0)
    };
    let c = match family {
        "qr-log" => qr_log_adesign(need_q()?)?,
        "qr-restrict" => qr_restriction_adesign(need_p()?)?,
        "qr-restrict-complement" => qr_restriction_complement_adesign(need_p()?)?,
        "quartic-odd" => quartic_union_family(need_q()?)?,
        "quartic-even" => quartic_even_family(need_q()?)?,
        "mixed" => {
            let case = case
                .and_then(MixedCase::from_number)
                .ok_or_else(|| CliError::new("mixed needs --case 1|2|3".to_string()))?;
            let indices = match index_set {
                Some(text) => Some(parse_elements(&text)?),
                None => None,
            };
            mixed_union_family(need_q()?, case, indices.as_deref())?
        }
        "qr-pair-design" => qr_pair_design(need_q()?)?,
        "augment-dual" => {
            let s = base_design(&input)?;
            let idx_text = blocks
                .ok_or_else(|| CliError::new("augment-dual needs --blocks i,j,...".to_string()))?;
            let indices: Vec<usize> =
                parse_elements(&idx_text)?.into_iter().map(|x| x as usize).collect();
            augment_dual_adesign(&s, &indices)?
        }
        "exchange-dual" => {
            let s = base_design(&input)?;
            let b = block
                .ok_or_else(|| CliError::new("exchange-dual needs --block INDEX".to_string()))?;
            exchange_dual_adesign(&s, b)?
        }
        "qr-3adesign" => qr_3adesign(need_q()?)?,
        "pair-union-3adesign" => {
            let n = n.ok_or_else(|| CliError::new("pair-union-3adesign needs --n".to_string()))?;
            pair_union_3adesign(n)?
        }
        "dev" => {
            let gtext = group.ok_or_else(|| CliError::new("dev needs --group".to_string()))?;
            let stext = set.ok_or_else(|| CliError::new("dev needs --set".to_string()))?;
            let g = parse_group(&gtext)?;
            let subset = parse_elements(&stext)?;
            development_construction(&g, &subset)?
        }
        other => {
            return Err(CliError::new(format!("unknown family {other:?}")));
        }
    };
    Ok(c)
}

fn parse_claim(text: &str) -> Result<(usize, u64, u64, u64), CliError> {
    let parts: Vec<u64> = parse_elements(text)?;
    if parts.len() != 4 {
        return Err(CliError::new("claim must be t,v,k,lambda".to_string()));
    }
    Ok((parts[0] as usize, parts[1], parts[2], parts[3]))
}

fn analyze_subset(g: &Group, elements: &[u64]) -> Result<(), CliError> {
    let profile = difference_profile(g, elements)?;
    println!("group order v = {}, subset size k = {}", profile.v, profile.k);
    let counts = profile.class_counts();
    for ((level, class), count) in profile.levels.iter().zip(&profile.classes).zip(&counts) {
        println!("difference level {level}: {count} elements, T = {class:?}");
    }
    let classification = match &profile.classification {
        Classification::DifferenceSet { lambda } => {
            format!("difference set ({}, {}, {lambda})", profile.v, profile.k)
        }
        Classification::AlmostDifferenceSet { v, k, lambda, t } => {
            format!("almost difference set ({v}, {k}, {lambda}, {t})")
        }
        Classification::MultiLevel { levels } => {
            format!("multi-level subset, levels {levels:?}")
        }
    };
    println!("classification: {classification}");
    println!("paley type: {}", is_paley_type(g, elements));
    println!(
        "level equation: sum(mu_i * t_i) = {} = k(k-1) = {}",
        profile.weighted_sum(),
        profile.k * (profile.k - 1)
    );
    Ok(())
}

fn analyze_lift(g: &Group, elements: &[u64], adjoined: &[u64]) -> Result<(), CliError> {
    let (lift, _) = lift_to_z2(g, elements, adjoined)?;
    println!("lift: {}", lift.describe());
    println!("lifted subset (element indices in Z2 x G): {:?}", lift.subset);
    let h = &lift.hypotheses;
    println!("hypothesis: odd layer covered = {}", h.odd_layer_covered);
    println!(
        "hypothesis: odd-layer multiplicity <= 2 = {}",
        h.odd_layer_multiplicity_at_most_2
    );
    println!(
        "hypothesis: exactly one adjoined element in base set = {}",
        h.exactly_one_adjoined_in_base
    );
    println!(
        "hypothesis: no doubled adjoined element is a sum of two others = {}",
        h.no_adjoined_double_collision
    );
    println!(
        "hypothesis: some difference has multiplicity 1 = {}",
        h.some_multiplicity_one
    );
    let product = Group::product2(g.clone());
    analyze_subset(&product, &lift.subset)
}

fn code_report(
    s: &IncidenceStructure,
    extend: bool,
    cap: u64,
    jobs: usize,
) -> Result<(), CliError> {
    let a = incidence_matrix(s);
    println!(
        "incidence matrix: {} x {}, symmetric entrywise: {}",
        a.rows(),
        a.cols(),
        a.is_symmetric()
    );
    let generator = if extend { a.with_ones_column() } else { a.clone() };
    let rank = rank_gf2(&generator);
    println!(
        "generator matrix{}: rank_gf2 = {rank} (code length {})",
        if extend { " (ones-extended)" } else { "" },
        generator.cols()
    );
    println!(
        "gram ranks of the incidence matrix: gf2 = {}, rational = {}",
        gram_rank_gf2(&a),
        gram_rank_rational(&a)
    );
    let so = self_orthogonality_report(s);
    println!(
        "self-orthogonality: parity precondition = {}, extension used = {}, self-orthogonal = {}",
        so.parity_precondition, so.extended, so.self_orthogonal
    );
    if let Some((i, j)) = so.counterexample_rows {
        if i == j {
            println!("counterexample: row {i} has odd weight");
        } else {
            println!("counterexample: rows {i} and {j} have odd inner product");
        }
    }
    match min_distance(&generator, DEFAULT_DIM_CAP) {
        Ok(d) => println!("minimum distance: {d}"),
        Err(e) => println!("minimum distance: skipped ({e})"),
    }
    match parallel::profile(s, 2, cap, jobs) {
        Ok(profile) => {
            println!("2-levels: {:?} -> {}", profile.level_values(), profile.verdict);
            bound_comparisons(s, &profile, so.self_orthogonal);
        }
        Err(e) => println!("2-level profile not computed: {e}"),
    }
    Ok(())
}

fn bound_comparisons(
    s: &IncidenceStructure,
    profile: &adesign_core::incidence::LevelProfile,
    self_orthogonal: bool,
) {
    let Some(k) = s.uniform_block_size() else {
        println!("bounds skipped: block sizes are not uniform");
        return;
    };
    let (v, k, b) = (s.v() as u64, k as u64, s.b() as u64);
    let (packing_lambda, covering_lambda) = match &profile.verdict {
        Verdict::TDesign { lambda } => (*lambda, *lambda),
        Verdict::TAdesign { lambda } => (lambda + 1, *lambda),
        Verdict::MultiLevel { .. } => {
            println!("bounds skipped: more than two levels");
            return;
        }
    };
    match packing_bound(v, k, Ratio::integer(packing_lambda)) {
        Ok(out) => println!(
            "packing bound (lambda = {packing_lambda}): r2 = {}, d2 = {}, bound = {}, b = {b}",
            out.r,
            out.d,
            out.bound.map_or_else(|| "-".to_string(), |x| x.to_string()),
        ),
        Err(e) => println!("packing bound: {e}"),
    }
    match covering_rank_bound(v, k, Ratio::integer(covering_lambda)) {
        Ok(out) => println!(
            "covering rank bound (lambda = {covering_lambda}): r1 = {}, d1 = {}, bound = {}",
            out.r,
            out.d,
            out.bound.map_or_else(|| "-".to_string(), |x| x.to_string()),
        ),
        Err(e) => println!("covering rank bound: {e}"),
    }
    if self_orthogonal && s.is_symmetric() {
        if let Some((mu1, mu2, count1, _)) = profile.two_levels() {
            if (2 * count1) % v == 0 {
                let t = 2 * count1 / v;
                match dual_distance_lower_bound(k, mu1, mu2, v, t) {
                    Ok(d) => println!("dual distance lower bound: {d} (t = {t})"),
                    Err(e) => println!("dual distance bound: {e}"),
                }
            }
        } else if let Verdict::TDesign { lambda } = &profile.verdict {
            match dual_distance_lower_bound(k, *lambda, *lambda, v, 0) {
                Ok(d) => println!("dual distance lower bound: {d} (design case)"),
                Err(e) => println!("dual distance bound: {e}"),
            }
        }
    }
}
