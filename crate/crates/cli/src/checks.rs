use std::path::PathBuf;

use clap::{Args, ValueEnum};
use kkmforge::checks::{
    default_probes, kkm_check, lebesgue_check, strengthened_kkm_check, verify_report, CheckReport, FactorParams,
    Sampling,
};
use kkmforge::covers::{brick_cover, halves_cover, vertex_star_cover, CoverFile, GridCover};
use kkmforge::sections::sample_sd;

use crate::io::{read_json, CmdResult, Failure, Outcome};
use crate::RunConfig;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ExampleCover {
    /// Δ² split along t_0 = t_1.
    Halves,
    /// Closed vertex stars of a simplex.
    VertexStar,
    /// Offset bricks on the square.
    Bricks,
}

#[derive(Args, Debug)]
pub struct CoverSource {
    /// Cover file (base shape and labelled cell lists).
    #[arg(long, conflicts_with = "example")]
    pub cover: Option<PathBuf>,
    /// Built-in cover at the configured resolution.
    #[arg(long, value_enum)]
    pub example: Option<ExampleCover>,
    /// Simplex vertices for the vertex-star example.
    #[arg(long, default_value_t = 3)]
    pub vertices: usize,
}

impl CoverSource {
    pub fn load(&self, cfg: &RunConfig) -> Result<GridCover, Failure> {
        match (&self.cover, self.example) {
            (Some(path), _) => {
                let file: CoverFile = read_json(path)?;
                GridCover::from_file(file).map_err(Failure::input)
            }
            (None, Some(ExampleCover::Halves)) => halves_cover(cfg.resolution).map_err(Failure::input),
            (None, Some(ExampleCover::VertexStar)) => {
                vertex_star_cover(self.vertices, cfg.resolution).map_err(Failure::input)
            }
            (None, Some(ExampleCover::Bricks)) => {
                let w = (cfg.resolution / 4).max(1);
                brick_cover(cfg.resolution, w, w).map_err(Failure::input)
            }
            (None, None) => Err(Failure::Input("give --cover or --example".into())),
        }
    }
}

pub fn parse_factor(s: &str) -> Result<FactorParams, String> {
    let (d, n) = s.split_once(':').ok_or("expected d:n")?;
    Ok(FactorParams { d: d.trim().parse().map_err(|_| "bad d")?, n: n.trim().parse().map_err(|_| "bad n")? })
}

fn finish(report: CheckReport) -> CmdResult {
    Outcome::new(report.exit_code(), report)
}

pub fn kkm(cover: &GridCover, d: usize, n: usize, cfg: &RunConfig) -> CmdResult {
    let params = [FactorParams { d, n }];
    let probes = default_probes(cover.base(), &params, cfg.probes, cfg.seed).map_err(Failure::input)?;
    let sampling = Sampling { seed: cfg.seed, random_probes: cfg.probes };
    let probes = probes.into_iter().next().unwrap_or_default();
    finish(kkm_check(cover, d, n, probes, sampling).map_err(Failure::input)?)
}

pub fn lebesgue(cover: &GridCover, params: &[FactorParams], cfg: &RunConfig) -> CmdResult {
    let probes = default_probes(cover.base(), params, cfg.probes, cfg.seed).map_err(Failure::input)?;
    let sampling = Sampling { seed: cfg.seed, random_probes: cfg.probes };
    finish(lebesgue_check(cover, params, probes, sampling).map_err(Failure::input)?)
}

pub fn skkm(cover: &GridCover, d: usize, n: usize, r: usize, cfg: &RunConfig) -> CmdResult {
    let size = cover.base().factors().first().map_or(0, |f| f.simplex_size());
    let probes_d = sample_sd(size, d, cfg.probes, cfg.seed).map_err(Failure::input)?;
    let probes_r = sample_sd(size, r, cfg.probes, cfg.seed.wrapping_add(1)).map_err(Failure::input)?;
    let sampling = Sampling { seed: cfg.seed, random_probes: cfg.probes };
    finish(strengthened_kkm_check(cover, d, n, r, probes_d, probes_r, sampling).map_err(Failure::input)?)
}

pub fn verify(cover: &GridCover, report: &CheckReport) -> Result<Result<(), String>, Failure> {
    Ok(verify_report(report, cover))
}
