//! Rule shapes: the plain implication and its three negated variants.

use std::fmt;
use std::str::FromStr;

/// Which side of a negative rule carries the negation. "Absent" here means
/// the side's itemset is not fully contained in a transaction, not that
/// every item of it is missing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NegationForm {
    /// A => not-B
    ConsequentAbsent,
    /// not-A => B
    AntecedentAbsent,
    /// not-A => not-B
    BothAbsent,
}

impl NegationForm {
    pub const ALL: [NegationForm; 3] = [
        NegationForm::ConsequentAbsent,
        NegationForm::AntecedentAbsent,
        NegationForm::BothAbsent,
    ];

    /// True when the antecedent side is the negated one.
    pub fn negates_antecedent(self) -> bool {
        matches!(self, NegationForm::AntecedentAbsent | NegationForm::BothAbsent)
    }
}

/// A rule shape. The derived ordering (positive first, then the negated
/// variants in declaration order) is the canonical report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleForm {
    Positive,
    Negative(NegationForm),
}

impl RuleForm {
    pub const ALL: [RuleForm; 4] = [
        RuleForm::Positive,
        RuleForm::Negative(NegationForm::ConsequentAbsent),
        RuleForm::Negative(NegationForm::AntecedentAbsent),
        RuleForm::Negative(NegationForm::BothAbsent),
    ];

    /// Stable token used in reports and on the command line.
    pub fn token(self) -> &'static str {
        match self {
            RuleForm::Positive => "pos",
            RuleForm::Negative(NegationForm::ConsequentAbsent) => "anb",
            RuleForm::Negative(NegationForm::AntecedentAbsent) => "nab",
            RuleForm::Negative(NegationForm::BothAbsent) => "nanb",
        }
    }
}

impl fmt::Display for RuleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for RuleForm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pos" => Ok(RuleForm::Positive),
            "anb" => Ok(RuleForm::Negative(NegationForm::ConsequentAbsent)),
            "nab" => Ok(RuleForm::Negative(NegationForm::AntecedentAbsent)),
            "nanb" => Ok(RuleForm::Negative(NegationForm::BothAbsent)),
            other => Err(format!(
                "unknown rule form `{other}` (expected pos, anb, nab or nanb)"
            )),
        }
    }
}

/// The set of rule forms a mining run is asked to emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleForms {
    pub positive: bool,
    pub consequent_absent: bool,
    pub antecedent_absent: bool,
    pub both_absent: bool,
}

impl RuleForms {
    pub fn all() -> Self {
        RuleForms {
            positive: true,
            consequent_absent: true,
            antecedent_absent: true,
            both_absent: true,
        }
    }

    pub fn none() -> Self {
        RuleForms {
            positive: false,
            consequent_absent: false,
            antecedent_absent: false,
            both_absent: false,
        }
    }

    pub fn positive_only() -> Self {
        RuleForms { positive: true, ..RuleForms::none() }
    }

    pub fn negative_only() -> Self {
        RuleForms { positive: false, ..RuleForms::all() }
    }

    pub fn contains(&self, form: RuleForm) -> bool {
        match form {
            RuleForm::Positive => self.positive,
            RuleForm::Negative(NegationForm::ConsequentAbsent) => self.consequent_absent,
            RuleForm::Negative(NegationForm::AntecedentAbsent) => self.antecedent_absent,
            RuleForm::Negative(NegationForm::BothAbsent) => self.both_absent,
        }
    }

    pub fn insert(&mut self, form: RuleForm) {
        match form {
            RuleForm::Positive => self.positive = true,
            RuleForm::Negative(NegationForm::ConsequentAbsent) => self.consequent_absent = true,
            RuleForm::Negative(NegationForm::AntecedentAbsent) => self.antecedent_absent = true,
            RuleForm::Negative(NegationForm::BothAbsent) => self.both_absent = true,
        }
    }

    pub fn is_empty(&self) -> bool {
        !self.positive && !self.has_negative()
    }

    pub fn has_negative(&self) -> bool {
        self.consequent_absent || self.antecedent_absent || self.both_absent
    }

    /// Enabled forms in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = RuleForm> + '_ {
        RuleForm::ALL.into_iter().filter(|f| self.contains(*f))
    }

    /// Enabled negated forms in canonical order.
    pub fn negation_forms(&self) -> impl Iterator<Item = NegationForm> + '_ {
        NegationForm::ALL
            .into_iter()
            .filter(|f| self.contains(RuleForm::Negative(*f)))
    }
}

impl Default for RuleForms {
    fn default() -> Self {
        RuleForms::all()
    }
}

impl fmt::Display for RuleForms {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for form in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            f.write_str(form.token())?;
        }
        if first {
            f.write_str("none")?;
        }
        Ok(())
    }
}

impl FromStr for RuleForms {
    type Err = String;

    /// Accepts the shorthands `all`, `pos` and `neg`, or a comma-separated
    /// list of form tokens such as `pos,anb`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => return Ok(RuleForms::all()),
            "pos" => return Ok(RuleForms::positive_only()),
            "neg" => return Ok(RuleForms::negative_only()),
            _ => {}
        }
        let mut forms = RuleForms::none();
        for token in s.split(',') {
            let token = token.trim();
            if token.is_empty() {
                return Err(format!("empty form token in `{s}`"));
            }
            forms.insert(token.parse::<RuleForm>()?);
        }
        Ok(forms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_pos_anb_nab_nanb() {
        let mut sorted = RuleForm::ALL.to_vec();
        sorted.sort();
        assert_eq!(sorted, RuleForm::ALL.to_vec());
        assert!(RuleForm::Positive < RuleForm::Negative(NegationForm::ConsequentAbsent));
    }

    #[test]
    fn tokens_roundtrip() {
        for form in RuleForm::ALL {
            assert_eq!(form.token().parse::<RuleForm>().unwrap(), form);
        }
        assert!("posx".parse::<RuleForm>().is_err());
    }

    #[test]
    fn form_sets_parse() {
        assert_eq!("all".parse::<RuleForms>().unwrap(), RuleForms::all());
        assert_eq!("pos".parse::<RuleForms>().unwrap(), RuleForms::positive_only());
        assert_eq!("neg".parse::<RuleForms>().unwrap(), RuleForms::negative_only());
        let mixed: RuleForms = "pos,anb".parse().unwrap();
        assert!(mixed.positive && mixed.consequent_absent);
        assert!(!mixed.antecedent_absent && !mixed.both_absent);
        assert!("pos,,anb".parse::<RuleForms>().is_err());
        assert!("bogus".parse::<RuleForms>().is_err());
        assert_eq!("anb".parse::<RuleForms>().unwrap().iter().count(), 1);
    }

    #[test]
    fn display_lists_enabled_tokens() {
        assert_eq!(RuleForms::all().to_string(), "pos,anb,nab,nanb");
        assert_eq!(RuleForms::none().to_string(), "none");
        assert_eq!(RuleForms::positive_only().to_string(), "pos");
    }
}
