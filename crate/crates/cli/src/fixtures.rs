//! Example files bundled into the binary.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Representation,
    Markov,
}

impl Kind {
    pub fn label(self) -> &'static str {
        match self {
            Kind::Representation => "representation",
            Kind::Markov => "markov",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub kind: Kind,
    pub description: &'static str,
    pub text: &'static str,
}

macro_rules! fixture {
    ($name:literal, $kind:ident, $ext:literal, $description:literal) => {
        Fixture {
            name: $name,
            kind: Kind::$kind,
            description: $description,
            text: include_str!(concat!("../fixtures/", $name, ".", $ext)),
        }
    };
}

pub const FIXTURES: &[Fixture] = &[
    fixture!("biased-triangle", Markov, "markov", "three-state chain with weights 1/3 and 2/3"),
    fixture!("uniform-triangle", Markov, "markov", "three-state chain with every weight 1/2"),
    fixture!("hidden-nonmarkov", Representation, "rep", "biased triangle with states 2 and 3 merged; not Markov"),
    fixture!("hidden-uniform", Representation, "rep", "uniform triangle with states 2 and 3 merged"),
    fixture!("hidden-uniform-reduced", Representation, "rep", "minimal form of hidden-uniform"),
    fixture!("five-state", Representation, "rep", "five-state family at p = 1/3, r = 1/2; minimal dimension 4"),
    fixture!("five-state-bernoulli", Representation, "rep", "five-state family at p = r = 1/2; Bernoulli"),
    fixture!("four-letter", Representation, "rep", "four-letter chain; 1-step Markov"),
    fixture!("four-letter-reduced", Representation, "rep", "signed minimal form of four-letter"),
];

pub fn find(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}
