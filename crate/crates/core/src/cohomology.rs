//! Dirac cohomology of unitary `ℍ_n`-modules as `S̃_n`-representations.
//!
//! [`dirac_cohomology_general`] is the reference computation: when the
//! central character of `X` is `h_λ` for a strict `λ`, the cohomology is the
//! `λ`-part of `X|_{S_n} ⊗ S`. The closed forms for single Speh modules and
//! spherical modules are provided alongside, each in a literal version and a
//! version that agrees with the reference (see the notes they emit).

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partition::{casimir_scalar, distinct_partitions, middle_element, CharacterVector, DistinctPartition};
use crate::spin::{associate, member_multiplicity, spin_module_restriction, Associate, SpinMultiset, SpinType};
use crate::unitary::{
    central_character, concatenated_hooks, restriction_to_w, validate_unitary, CentralCharacter, Factor, SpehFactor,
    UnitaryModule,
};

/// Which simple Clifford module `S^ε` is used: two choices when `n` is odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpinChoice {
    Plus,
    Minus,
    Unique,
}

impl SpinChoice {
    /// `+` for odd `n`, the unique module for even `n`.
    pub fn default_for(n: usize) -> Self {
        if n % 2 == 1 {
            SpinChoice::Plus
        } else {
            SpinChoice::Unique
        }
    }

    /// Normalizes a requested choice: even `n` always has the unique module.
    pub fn resolve(n: usize, requested: Option<SpinChoice>) -> Self {
        match requested {
            _ if n % 2 == 0 => SpinChoice::Unique,
            None | Some(SpinChoice::Unique) => SpinChoice::Plus,
            Some(c) => c,
        }
    }

    /// The label given to `σ̃^ε` when a formula names a single member.
    pub fn label(self) -> Associate {
        match self {
            SpinChoice::Minus => Associate::Minus,
            _ => Associate::Plus,
        }
    }

    pub fn sign(self) -> i32 {
        match self {
            SpinChoice::Minus => -1,
            _ => 1,
        }
    }
}

impl fmt::Display for SpinChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpinChoice::Plus => "+",
            SpinChoice::Minus => "-",
            SpinChoice::Unique => "unique",
        })
    }
}

impl FromStr for SpinChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "plus" => Ok(SpinChoice::Plus),
            "-" | "\u{2212}" | "minus" => Ok(SpinChoice::Minus),
            "unique" => Ok(SpinChoice::Unique),
            other => Err(Error::parse(0, format!("spin choice must be +, - or unique, got {other:?}"))),
        }
    }
}

/// `H^D_ε(X)` as a multiset of genuine types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyResult {
    pub nonzero: bool,
    pub witness: Option<DistinctPartition>,
    pub decomposition: SpinMultiset,
    pub spin_choice: SpinChoice,
    /// Places where a literal formula had to be read non-literally.
    pub notes: Vec<String>,
}

impl CohomologyResult {
    fn from_parts(witness: DistinctPartition, decomposition: SpinMultiset, spin_choice: SpinChoice) -> Self {
        let nonzero = !decomposition.is_empty();
        Self { nonzero, witness: nonzero.then_some(witness), decomposition, spin_choice, notes: Vec::new() }
    }

    pub fn zero(spin_choice: SpinChoice) -> Self {
        Self { nonzero: false, witness: None, decomposition: SpinMultiset::new(), spin_choice, notes: Vec::new() }
    }

    pub fn total_dimension(&self) -> u64 {
        self.decomposition.total_dimension()
    }

    /// Equality up to swapping `+` and `-` inside associate pairs.
    pub fn symmetrized_eq(&self, other: &CohomologyResult) -> bool {
        self.decomposition.symmetrized() == other.decomposition.symmetrized()
    }
}

impl fmt::Display for CohomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.decomposition)?;
        if let Some(w) = &self.witness {
            write!(f, " (witness {w})")?;
        }
        Ok(())
    }
}

/// `{h_λ : λ ∈ DP(n)}` in `DP(n)` order.
pub fn allowed_central_characters(n: usize) -> Vec<CharacterVector> {
    distinct_partitions(n).iter().map(|l| middle_element(l.as_partition())).collect()
}

/// The `λ ∈ DP(n)` with `h_λ` equal to the given central character, if any.
pub fn matching_lambda(chi: &CentralCharacter) -> Option<DistinctPartition> {
    if !chi.is_real() {
        return None;
    }
    let real = chi.real_part();
    distinct_partitions(real.len()).into_iter().find(|l| middle_element(l.as_partition()) == real)
}

/// Nonvanishing test: every factor is an untwisted Speh module and the
/// concatenated hook strings have no repeated entry. Returns the strict
/// partition the strings form.
pub fn has_nonzero_dirac(x: &UnitaryModule) -> (bool, Option<DistinctPartition>) {
    match concatenated_hooks(x) {
        Some(l) => (true, Some(l)),
        None => (false, None),
    }
}

fn fiber(lambda: &DistinctPartition) -> Vec<SpinType> {
    if lambda.is_even() {
        vec![SpinType::new(lambda.clone(), Associate::SelfAssociate).expect("even")]
    } else {
        vec![
            SpinType::new(lambda.clone(), Associate::Plus).expect("odd"),
            SpinType::new(lambda.clone(), Associate::Minus).expect("odd"),
        ]
    }
}

/// `Σ_{σ̃ over λ} Σ_μ [σ̃ : σ_μ ⊗ S]·[X|_W : σ_μ] σ̃` when `X` has central
/// character `h_λ`, zero otherwise.
pub fn dirac_cohomology_general(x: &UnitaryModule, spin_choice: SpinChoice) -> Result<CohomologyResult> {
    let report = validate_unitary(x);
    if !report.is_ok() {
        return Err(Error::Unsupported(format!("{x}: {report}")));
    }
    let Some(lambda) = matching_lambda(&central_character(x)) else {
        return Ok(CohomologyResult::zero(spin_choice));
    };
    assert!(
        x.factors().iter().all(|f| matches!(f, Factor::Speh(_))),
        "{x}: a complementary factor cannot have the character h_{lambda}"
    );
    let restriction = restriction_to_w(x)?;
    let mut decomposition = SpinMultiset::new();
    for s in fiber(&lambda) {
        let mut total = 0;
        for (mu, &k) in &restriction {
            total += k * member_multiplicity(s.lambda(), mu)?;
        }
        decomposition.add(s, total);
    }
    Ok(CohomologyResult::from_parts(lambda, decomposition, spin_choice))
}

/// Places `mult` copies of `σ̃^ε_λ` (or of both members when `both`),
/// recording a note when the labels do not fit the parity of `λ`.
fn place(lambda: &DistinctPartition, mult: u64, both: bool, choice: SpinChoice, notes: &mut Vec<String>) -> SpinMultiset {
    let mut out = SpinMultiset::new();
    match (lambda.is_even(), both) {
        (true, true) => {
            notes.push(format!("σ̃^±_{lambda} named, but {lambda} is self-associate; counted as 2·σ̃_{lambda}"));
            out.add(SpinType::with_sign(lambda.clone(), Associate::SelfAssociate), 2 * mult);
        }
        (true, false) => out.add(SpinType::with_sign(lambda.clone(), Associate::SelfAssociate), mult),
        (false, true) => {
            for s in fiber(lambda) {
                out.add(s, mult);
            }
        }
        (false, false) => {
            notes.push(format!("a single member σ̃^ε_{lambda} of an associate pair named"));
            out.add(SpinType::with_sign(lambda.clone(), choice.label()), mult);
        }
    }
    out
}

/// The closed form for `a(m,d)` read literally in `(m,d)`:
/// `2^{(d-1)/2}(σ̃^+ + σ̃^-)` for `d` odd, `m` even; `2^{⌊(d-1)/2⌋} σ̃^ε` for
/// `d, m` odd; `2^{⌊(d+1)/2⌋} σ̃^ε` otherwise, all on the hooks of the box.
pub fn dirac_cohomology_speh_literal(f: &SpehFactor, spin_choice: SpinChoice) -> Result<CohomologyResult> {
    check_speh(f)?;
    let lambda = DistinctPartition::new(f.hook_string())?;
    let (m, d) = (f.m, f.d);
    let mut notes = Vec::new();
    let decomposition = if d % 2 == 1 && m % 2 == 0 {
        place(&lambda, 1 << ((d - 1) / 2), true, spin_choice, &mut notes)
    } else if d % 2 == 1 {
        place(&lambda, 1 << ((d - 1) / 2), false, spin_choice, &mut notes)
    } else {
        place(&lambda, 1 << ((d + 1) / 2), false, spin_choice, &mut notes)
    };
    let mut r = CohomologyResult::from_parts(lambda, decomposition, spin_choice);
    r.notes = notes;
    Ok(r)
}

/// Closed form for a single Speh module.
///
/// The literal formula is correct for `d ≤ m`. Since `a(d,m)` is the sign
/// twist of `a(m,d)`, the case `d > m` is the associate of the literal
/// formula for `a(d,m)`.
pub fn dirac_cohomology_speh(f: &SpehFactor, spin_choice: SpinChoice) -> Result<CohomologyResult> {
    check_speh(f)?;
    if f.d <= f.m {
        return dirac_cohomology_speh_literal(f, spin_choice);
    }
    let swapped = dirac_cohomology_speh_literal(&SpehFactor::new(f.d, f.m), spin_choice)?;
    let mut decomposition = SpinMultiset::new();
    for (s, k) in swapped.decomposition.iter() {
        decomposition.add(associate(s), k);
    }
    Ok(CohomologyResult { decomposition, ..swapped })
}

fn check_speh(f: &SpehFactor) -> Result<()> {
    if f.m == 0 || f.d == 0 {
        return Err(Error::InvalidPartition(vec![f.m, f.d]));
    }
    if !f.is_real() {
        return Err(Error::Unsupported(format!("closed form for the twisted factor {f}")));
    }
    Ok(())
}

/// The closed form for the spherical module `L(h_λ)`, read literally: `S^ε`
/// for `λ = (n)`, otherwise `2^{⌊(ℓ-1)/2⌋}σ̃_λ` (`n` odd, `λ` even),
/// `2^{⌊(ℓ-1)/2⌋}(σ̃^+_λ + σ̃^-_λ)` (`n` odd, `λ` odd) and
/// `2^{⌊ℓ/2 - 1⌋}(σ̃^ε_λ + σ̃^ε_λ ⊗ sgn)` (`n` even).
pub fn dirac_cohomology_spherical(n: usize, lambda: &DistinctPartition, spin_choice: SpinChoice) -> Result<CohomologyResult> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch { left: lambda.size(), right: n });
    }
    if lambda.len() == 1 {
        return Ok(CohomologyResult::from_parts(lambda.clone(), spin_module_restriction(n)?, spin_choice));
    }
    let l = lambda.len();
    let mut out = SpinMultiset::new();
    if n % 2 == 1 {
        let k = 1u64 << ((l - 1) / 2);
        for s in fiber(lambda) {
            out.add(s, k);
        }
    } else {
        let k = 1u64 << (l / 2 - 1);
        let s = SpinType::with_sign(lambda.clone(), spin_choice.label());
        out.add(associate(&s), k);
        out.add(s, k);
    }
    Ok(CohomologyResult::from_parts(lambda.clone(), out, spin_choice))
}

/// The spherical module with central character `h_λ` is the product of the
/// one-row Speh modules `a(λ₁,1) ⋯ a(λ_ℓ,1)`; its general-formula cohomology.
pub fn spherical_module(lambda: &DistinctPartition) -> UnitaryModule {
    UnitaryModule::from_speh(lambda.parts().iter().map(|&k| SpehFactor::new(k, 1))).expect("nonempty")
}

pub fn dirac_cohomology_spherical_derived(lambda: &DistinctPartition, spin_choice: SpinChoice) -> Result<CohomologyResult> {
    dirac_cohomology_general(&spherical_module(lambda), spin_choice)
}

/// `⟨χ,χ⟩ = ⟨h_λ,h_λ⟩` for the `λ` of `σ̃`.
pub fn criterion_check(chi: &CharacterVector, s: &SpinType) -> bool {
    chi.norm_squared() == casimir_scalar(s.lambda())
}

/// JSON record for one module; pairs are reported with their pair total.
pub fn cohomology_json(x: &UnitaryModule, r: &CohomologyResult) -> Value {
    let chi = central_character(x);
    let cohomology: Vec<Value> = r
        .decomposition
        .symmetrized()
        .iter()
        .map(|(l, &k)| {
            json!({
                "lambda": l.parts(),
                "associate": if l.is_even() { "self" } else { "pair" },
                "multiplicity": k,
            })
        })
        .collect();
    let mut v = json!({
        "module": x.to_string(),
        "nonzero": r.nonzero,
        "witness": r.witness.as_ref().map(|w| w.parts().to_vec()),
        "cohomology": cohomology,
        "central_character": chi.real_part().entries().iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    if !chi.is_real() {
        v["central_character_imag"] = json!(chi.imag_part().iter().map(ToString::to_string).collect::<Vec<_>>());
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn dp(v: &[usize]) -> DistinctPartition {
        DistinctPartition::new(v.to_vec()).unwrap()
    }

    fn module(s: &str) -> UnitaryModule {
        s.parse().unwrap()
    }

    #[test]
    fn allowed_characters() {
        let cv = |v: &[(i64, i64)]| CharacterVector::new(v.iter().map(|&(a, b)| q(a, b)).collect());
        assert_eq!(allowed_central_characters(2), vec![cv(&[(1, 2), (-1, 2)])]);
        assert_eq!(allowed_central_characters(1), vec![cv(&[(0, 1)])]);
        assert_eq!(allowed_central_characters(3), vec![cv(&[(1, 1), (0, 1), (-1, 1)]), cv(&[(1, 2), (-1, 2), (0, 1)])]);
    }

    #[test]
    fn decision() {
        assert_eq!(has_nonzero_dirac(&module("a(2,2)")), (true, Some(dp(&[3, 1]))));
        assert_eq!(has_nonzero_dirac(&module("a(1,2)*a(1,2)")), (false, None));
        assert_eq!(has_nonzero_dirac(&module("cs(a(1,1),1/4)")), (false, None));
        assert_eq!(has_nonzero_dirac(&module("a(2,2)@y=1/2")), (false, None));
    }

    #[test]
    fn speh_closed_forms() {
        let c = SpinChoice::Unique;
        assert_eq!(dirac_cohomology_speh(&SpehFactor::new(2, 1), c).unwrap().decomposition.to_string(), "[2]+ + [2]-");
        assert_eq!(dirac_cohomology_speh(&SpehFactor::new(1, 1), SpinChoice::Plus).unwrap().decomposition.to_string(), "[1]");
        assert_eq!(dirac_cohomology_speh(&SpehFactor::new(2, 2), c).unwrap().decomposition.to_string(), "2·[3,1]");
        // literal reading overcounts when d > m
        let lit = dirac_cohomology_speh_literal(&SpehFactor::new(1, 3), SpinChoice::Plus).unwrap();
        assert_eq!(lit.total_dimension(), 4);
        assert_eq!(dirac_cohomology_speh(&SpehFactor::new(1, 3), SpinChoice::Plus).unwrap().total_dimension(), 2);
    }

    #[test]
    fn general_examples() {
        let r = dirac_cohomology_general(&module("a(2,2)"), SpinChoice::Unique).unwrap();
        assert_eq!(r.decomposition.to_string(), "2·[3,1]");
        assert_eq!(r.witness, Some(dp(&[3, 1])));
        assert!(!dirac_cohomology_general(&module("a(1,2)*a(1,2)"), SpinChoice::Unique).unwrap().nonzero);
        assert!(!dirac_cohomology_general(&module("cs(a(1,1),1/4)"), SpinChoice::Unique).unwrap().nonzero);
        for n in 1..=8 {
            let r = dirac_cohomology_general(&UnitaryModule::speh(n, 1), SpinChoice::default_for(n)).unwrap();
            assert_eq!(r.decomposition, spin_module_restriction(n).unwrap());
        }
        assert!(dirac_cohomology_general(&module("cs(a(1,1),1/2)"), SpinChoice::Unique).is_err());
    }

    #[test]
    fn spherical_examples() {
        assert_eq!(
            dirac_cohomology_spherical(3, &dp(&[2, 1]), SpinChoice::Plus).unwrap().decomposition.to_string(),
            "[2,1]+ + [2,1]-"
        );
        assert_eq!(
            dirac_cohomology_spherical(4, &dp(&[3, 1]), SpinChoice::Unique).unwrap().decomposition.to_string(),
            "2·[3,1]"
        );
        assert_eq!(
            dirac_cohomology_spherical(4, &dp(&[4]), SpinChoice::Unique).unwrap().decomposition,
            spin_module_restriction(4).unwrap()
        );
    }

    #[test]
    fn criterion() {
        let chi = CharacterVector::new(vec![q(1, 2), q(-1, 2)]);
        assert!(criterion_check(&chi, &"[2]+".parse().unwrap()));
        let chi = CharacterVector::new(vec![q(1, 1), q(0, 1), q(-1, 1), q(0, 1)]);
        assert!(!criterion_check(&chi, &"[4]-".parse().unwrap()));
        assert!(criterion_check(&chi, &"[3,1]".parse().unwrap()));
        assert!(criterion_check(&CharacterVector::new(vec![q(0, 1)]), &"[1]".parse().unwrap()));
    }

    #[test]
    fn spin_choice_parsing() {
        assert_eq!("+".parse::<SpinChoice>().unwrap(), SpinChoice::Plus);
        assert_eq!("\u{2212}".parse::<SpinChoice>().unwrap(), SpinChoice::Minus);
        assert!("x".parse::<SpinChoice>().is_err());
        assert_eq!(SpinChoice::resolve(4, Some(SpinChoice::Plus)), SpinChoice::Unique);
        assert_eq!(SpinChoice::resolve(3, None), SpinChoice::Plus);
    }

    #[test]
    fn json_shape() {
        let x = module("a(2,2)");
        let r = dirac_cohomology_general(&x, SpinChoice::Unique).unwrap();
        let v = cohomology_json(&x, &r);
        assert_eq!(
            v.to_string(),
            r#"{"central_character":["1","0","-1","0"],"cohomology":[{"associate":"self","lambda":[3,1],"multiplicity":2}],"module":"a(2,2)","nonzero":true,"witness":[3,1]}"#
        );
    }
}
