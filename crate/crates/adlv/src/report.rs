//! Serialization of reports and certificates.
//!
//! Rationals are serialized as `{"num": "...", "den": "..."}` strings so the
//! output is exact and diff-stable; sets come out as sorted arrays of
//! canonical coordinates. Node indices and firing words are 1-based in the
//! serialized form (Bourbaki labels), 0-based in the library API.

use crate::engine::{Certificate, VerificationReport};
use crate::error::{Error, Result};
use crate::game::GameWord;
use crate::lattices::{AmbientLattice, LatticeClass};
use crate::num::{parse_rat, Rat};
use crate::rootdata::{Family, WeightVec};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RatDto {
    pub num: String,
    pub den: String,
}

impl RatDto {
    pub fn of(x: &Rat) -> Self {
        RatDto { num: x.numer().to_string(), den: x.denom().to_string() }
    }

    pub fn to_rat(&self) -> Result<Rat> {
        let s = format!("{}/{}", self.num, self.den);
        parse_rat(&s).ok_or_else(|| Error::Precondition(format!("bad rational {s}")))
    }
}

pub fn weight_to_dto(w: &WeightVec) -> Vec<RatDto> {
    w.coords.iter().map(RatDto::of).collect()
}

pub fn weight_from_dto(d: &[RatDto]) -> Result<WeightVec> {
    Ok(WeightVec::new(d.iter().map(|r| r.to_rat()).collect::<Result<_>>()?))
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassDto {
    pub tag: String,
    pub coords: Vec<String>,
}

impl ClassDto {
    pub fn of(c: &LatticeClass) -> Self {
        ClassDto { tag: c.tag.clone(), coords: c.coords.iter().map(|x| x.to_string()).collect() }
    }

    pub fn to_class(&self) -> Result<LatticeClass> {
        let coords = self
            .coords
            .iter()
            .map(|s| s.parse().map_err(|_| Error::Precondition(format!("bad integer {s}"))))
            .collect::<Result<_>>()?;
        Ok(LatticeClass { tag: self.tag.clone(), coords })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GameWordDto {
    /// 1-based, applied right-to-left.
    pub word: Vec<usize>,
    pub start: Vec<RatDto>,
    pub end: Vec<RatDto>,
}

impl GameWordDto {
    pub fn of(g: &GameWord) -> Self {
        GameWordDto {
            word: g.word.iter().map(|i| i + 1).collect(),
            start: g.start().coords.iter().map(RatDto::of).collect(),
            end: g.end().coords.iter().map(RatDto::of).collect(),
        }
    }

    pub fn to_game(&self) -> Result<GameWord> {
        for &i in &self.word {
            if i == 0 {
                return Err(Error::Precondition("game word indices are 1-based".into()));
            }
        }
        let start = weight_from_dto(&self.start)?;
        let end = weight_from_dto(&self.end)?;
        Ok(GameWord::new(self.word.iter().map(|i| i - 1).collect(), &start, &end))
    }
}

fn ambient_str(a: AmbientLattice) -> &'static str {
    match a {
        AmbientLattice::Weight => "weight",
        AmbientLattice::Root => "root",
    }
}

fn ambient_from_str(s: &str) -> Result<AmbientLattice> {
    match s {
        "weight" => Ok(AmbientLattice::Weight),
        "root" => Ok(AmbientLattice::Root),
        other => Err(Error::Precondition(format!("unknown ambient lattice {other}"))),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckDto {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateDto {
    pub family: String,
    pub rank: usize,
    pub ambient: String,
    pub levi: Vec<usize>,
    pub mu: Vec<RatDto>,
    pub y: ClassDto,
    pub chamber_word: Vec<usize>,
    pub levi_image: Vec<usize>,
    pub y_dom: ClassDto,
    pub z: Vec<RatDto>,
    pub k: Vec<RatDto>,
    pub z_prime: Vec<RatDto>,
    pub game: GameWordDto,
    pub witness_point: Vec<RatDto>,
    pub checks: Vec<CheckDto>,
}

impl CertificateDto {
    pub fn of(c: &Certificate) -> Self {
        CertificateDto {
            family: c.family.to_string(),
            rank: c.rank,
            ambient: ambient_str(c.ambient).into(),
            levi: c.levi.iter().map(|i| i + 1).collect(),
            mu: weight_to_dto(&c.mu),
            y: ClassDto::of(&c.y),
            chamber_word: c.chamber_word.iter().map(|i| i + 1).collect(),
            levi_image: c.levi_image.iter().map(|i| i + 1).collect(),
            y_dom: ClassDto::of(&c.y_dom),
            z: weight_to_dto(&c.z),
            k: c.k.iter().map(RatDto::of).collect(),
            z_prime: weight_to_dto(&c.z_prime),
            game: GameWordDto::of(&c.game),
            witness_point: weight_to_dto(&c.witness_point),
            checks: c
                .checks
                .iter()
                .map(|(name, pass)| CheckDto { name: name.clone(), pass: *pass })
                .collect(),
        }
    }

    pub fn to_certificate(&self) -> Result<Certificate> {
        let family = Family::parse(&self.family)
            .ok_or_else(|| Error::Precondition(format!("unknown family {}", self.family)))?;
        let one_based = |v: &[usize]| -> Result<Vec<usize>> {
            v.iter()
                .map(|&i| {
                    if i == 0 {
                        Err(Error::Precondition("node indices are 1-based".into()))
                    } else {
                        Ok(i - 1)
                    }
                })
                .collect()
        };
        Ok(Certificate {
            family,
            rank: self.rank,
            ambient: ambient_from_str(&self.ambient)?,
            levi: one_based(&self.levi)?,
            mu: weight_from_dto(&self.mu)?,
            y: self.y.to_class()?,
            chamber_word: one_based(&self.chamber_word)?,
            levi_image: one_based(&self.levi_image)?,
            y_dom: self.y_dom.to_class()?,
            z: weight_from_dto(&self.z)?,
            k: self.k.iter().map(|r| r.to_rat()).collect::<Result<_>>()?,
            z_prime: weight_from_dto(&self.z_prime)?,
            game: self.game.to_game()?,
            witness_point: weight_from_dto(&self.witness_point)?,
            checks: self.checks.iter().map(|c| (c.name.clone(), c.pass)).collect(),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportDto {
    pub type_name: String,
    pub ambient: String,
    pub levi: Vec<usize>,
    pub mu: Vec<RatDto>,
    pub lhs: Vec<ClassDto>,
    pub rhs: Vec<ClassDto>,
    pub equal: bool,
    pub all_valid: bool,
    pub certificates: Vec<CertificateDto>,
    pub counterexamples: Vec<String>,
}

impl ReportDto {
    pub fn of(r: &VerificationReport) -> Self {
        ReportDto {
            type_name: r.type_name.clone(),
            ambient: ambient_str(r.ambient).into(),
            levi: r.levi.iter().map(|i| i + 1).collect(),
            mu: weight_to_dto(&r.mu),
            lhs: r.lhs.iter().map(ClassDto::of).collect(),
            rhs: r.rhs.iter().map(ClassDto::of).collect(),
            equal: r.equal,
            all_valid: r.all_valid(),
            certificates: r.certificates.iter().map(CertificateDto::of).collect(),
            counterexamples: r.counterexamples.clone(),
        }
    }
}

pub fn report_to_json(r: &VerificationReport) -> String {
    serde_json::to_string_pretty(&ReportDto::of(r)).expect("report serialization cannot fail")
}

pub fn certificate_to_json(c: &Certificate) -> String {
    serde_json::to_string_pretty(&CertificateDto::of(c))
        .expect("certificate serialization cannot fail")
}

pub fn certificate_from_json(s: &str) -> Result<Certificate> {
    let dto: CertificateDto = serde_json::from_str(s)
        .map_err(|e| Error::Precondition(format!("bad certificate JSON: {e}")))?;
    dto.to_certificate()
}

/// One sweep summary line.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub family: String,
    pub rank: usize,
    pub levi: Vec<usize>,
    pub mu: Vec<i64>,
    pub lhs_size: usize,
    pub equal: bool,
    pub all_valid: bool,
}

pub fn sweep_csv_header() -> &'static str {
    "type,rank,levi,mu,lhs,equal"
}

pub fn sweep_row_csv(row: &SweepRow) -> String {
    let levi: Vec<String> = row.levi.iter().map(|i| (i + 1).to_string()).collect();
    let mu: Vec<String> = row.mu.iter().map(|c| c.to_string()).collect();
    format!(
        "{},{},\"{}\",\"{}\",{},{}",
        row.family,
        row.rank,
        levi.join(" "),
        mu.join(" "),
        row.lhs_size,
        row.equal && row.all_valid
    )
}
