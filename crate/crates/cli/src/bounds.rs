use std::path::PathBuf;

use anyhow::Result;
use clap::Subcommand;
use serde_json::json;
use xclab_core::xcbounds::{fooling_set, nnr_bounds_report, rect_cover_exact, rect_cover_greedy, suppmat, verify_factorization};

use crate::report::Outcome;
use crate::{input, Ctx};

#[derive(Subcommand)]
pub enum BoundsCmd {
    /// 0/1 support pattern of a matrix.
    Suppmat {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Minimum (or greedy) cover of the support by all-ones rectangles.
    Rectcover {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        greedy: bool,
    },
    /// Largest fooling set of the support.
    Fooling {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Check M = QR with Q, R nonnegative.
    VerifyFactorization {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        q: PathBuf,
        #[arg(long)]
        r: PathBuf,
    },
    /// All lower and upper bounds on the nonnegative rank.
    Report {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, requires = "r")]
        q: Option<PathBuf>,
        #[arg(long, requires = "q")]
        r: Option<PathBuf>,
    },
}

impl BoundsCmd {
    pub fn name(&self) -> &'static str {
        match self {
            BoundsCmd::Suppmat { .. } => "suppmat",
            BoundsCmd::Rectcover { .. } => "rectcover",
            BoundsCmd::Fooling { .. } => "fooling",
            BoundsCmd::VerifyFactorization { .. } => "verify-factorization",
            BoundsCmd::Report { .. } => "report",
        }
    }
}

pub fn run(cmd: &BoundsCmd, ctx: &Ctx) -> Result<Outcome> {
    let budget = &ctx.budget;
    match cmd {
        BoundsCmd::Suppmat { matrix } => {
            let s = suppmat(&input::matrix(matrix)?)?;
            Ok(Outcome::ok(json!({ "rows": s.rows(), "cols": s.cols() })).count("ones", s.ones().len()).with_artifact(s.to_text()))
        }
        BoundsCmd::Rectcover { matrix, greedy } => {
            let s = suppmat(&input::matrix(matrix)?)?;
            let cover = if *greedy { rect_cover_greedy(&s) } else { rect_cover_exact(&s, budget)? };
            let payload = json!({ "exact": !greedy, "size": cover.size(), "rectangles": cover.rectangles });
            Ok(Outcome::ok(payload).count("rectangles", cover.size()))
        }
        BoundsCmd::Fooling { matrix } => {
            let s = suppmat(&input::matrix(matrix)?)?;
            let f = fooling_set(&s, budget)?;
            Ok(Outcome::ok(json!({ "size": f.len(), "cells": f })))
        }
        BoundsCmd::VerifyFactorization { matrix, q, r } => {
            let rep = verify_factorization(&input::matrix(matrix)?, &input::matrix(q)?, &input::matrix(r)?);
            Ok(Outcome::check(rep.ok, json!({ "ok": rep.ok, "problem": rep.problem })))
        }
        BoundsCmd::Report { matrix, q, r } => {
            let m = input::matrix(matrix)?;
            let fact = match (q, r) {
                (Some(q), Some(r)) => Some((input::matrix(q)?, input::matrix(r)?)),
                _ => None,
            };
            let rep = nnr_bounds_report(&m, fact.as_ref().map(|(q, r)| (q, r)), budget)?;
            Ok(Outcome::ok(serde_json::to_value(&rep)?))
        }
    }
}
