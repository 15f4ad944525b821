//! Human-readable run reports.
//!
//! Every subcommand prints the same envelope: the command echo, an input
//! digest, the body (claims, profiles, code data), the elapsed time and
//! the exit status. Refutations are ordinary, fully printed output; they
//! only affect the exit code.

use std::time::Instant;

use adesign_core::constructions::{ClaimRecord, ClaimStatus};
use adesign_core::incidence::{IncidenceStructure, LevelProfile};
use sha2::{Digest, Sha256};

pub struct RunReport {
    start: Instant,
    refuted: bool,
}

impl RunReport {
    pub fn begin() -> RunReport {
        let args: Vec<String> = std::env::args().collect();
        println!("command: {}", args.join(" "));
        RunReport { start: Instant::now(), refuted: false }
    }

    pub fn digest(&self, what: &str, bytes: &[u8]) {
        let mut hasher = Sha256::new();
        hasher.update(bytes);
        println!("{what} digest: sha256:{:x}", hasher.finalize());
    }

    pub fn note_status(&mut self, status: &ClaimStatus) {
        if !matches!(status, ClaimStatus::Confirmed) {
            self.refuted = true;
        }
    }

    pub fn flag_refuted(&mut self) {
        self.refuted = true;
    }

    /// Prints the trailer and returns the exit code (0 confirmed,
    /// 1 refuted).
    pub fn finish(self) -> i32 {
        let code = if self.refuted { 1 } else { 0 };
        println!("elapsed: {:.1} ms", self.start.elapsed().as_secs_f64() * 1e3);
        println!("exit status: {code}");
        code
    }
}

pub fn status_word(status: &ClaimStatus) -> &'static str {
    match status {
        ClaimStatus::Confirmed => "CONFIRMED",
        ClaimStatus::Refuted { .. } => "REFUTED",
        ClaimStatus::Inapplicable => "INAPPLICABLE",
    }
}

pub fn print_claim(claim: &ClaimRecord) {
    println!(
        "family {}: claimed {}-({}, {}, {}) {}, {} blocks",
        claim.family,
        claim.t,
        claim.v,
        claim.k,
        claim.lambda_display(),
        match claim.verdict {
            adesign_core::constructions::ClaimedVerdict::Design { .. } => "design",
            adesign_core::constructions::ClaimedVerdict::Adesign { .. } => "adesign",
            adesign_core::constructions::ClaimedVerdict::Levels { .. } => "structure",
        },
        claim.blocks
    );
    if let Some(c) = &claim.computed {
        let levels: Vec<String> = c.levels.iter().map(|(l, n)| format!("{l}: {n}")).collect();
        println!(
            "computed: v = {}, b = {}, k = {}, {}-levels {{{}}} -> {}",
            c.v,
            c.b,
            c.k.map_or_else(|| "mixed".to_string(), |k| k.to_string()),
            claim.t,
            levels.join(", "),
            c.verdict
        );
    }
    println!("status: {}", status_word(&claim.status));
    if let ClaimStatus::Refuted { actual_levels } = &claim.status {
        println!("observed levels: {actual_levels:?}");
    }
    for note in &claim.notes {
        println!("note: {note}");
    }
}

pub fn print_profile(s: &IncidenceStructure, profile: &LevelProfile) {
    println!(
        "points: {}, blocks: {}, t = {}, subsets counted: {}",
        s.v(),
        s.b(),
        profile.t,
        profile.total_subsets()
    );
    for (level, count) in &profile.levels {
        let witness = &profile.witnesses[level];
        let named: Vec<String> = witness.iter().map(|&p| s.label_of(p)).collect();
        println!(
            "level {level}: {count} subsets (witness {{{}}})",
            named.join(", ")
        );
    }
    println!("verdict: {}", profile.verdict);
}

/// Plain block table using point labels, for eyeballing against
/// catalogued block lists.
pub fn print_plain_blocks(s: &IncidenceStructure) {
    for block in s.blocks() {
        let named: Vec<String> = block.iter().map(|&p| s.label_of(p)).collect();
        println!("{{{}}}", named.join(","));
    }
}
