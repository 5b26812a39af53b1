/// Registry of anchor names. Every check cites one of these.
pub const ANCHORS: &[(&str, &str)] = &[
    ("identity:gegenbauer", "Laplace transform of t^{μ−1} J_ν(bt) as a ₂F₁"),
    ("identity:bateman", "fractional integral of ₂F₁ raising the lower parameter"),
    ("identity:kummer", "linear transformation F(a,b;c;u) = (1−u)^{−a} F(a,c−b;c;u/(u−1))"),
    ("identity:kummer-energy", "the transformation instantiated in the energy computation"),
    ("identity:1f0-collapse", "F(a,b;b;u) = (1−u)^{−a}"),
    ("identity:duplication", "Legendre duplication of the gamma function"),
    ("identity:sphere-integral", "exponential integral over the unit sphere via I_{m/2−1}"),
    ("kernel:homogeneity", "G*_{α,β} is homogeneous of degree −2β under parabolic dilations"),
    ("energy:conformal", "time integral of G*_{α,α+k} is a constant times N^{−(2α+2k−2)}"),
    ("kernel:pole-prefactor", "pole-limit prefactor 2π^α/Γ(α)"),
    ("kernel:pole-limit", "𝒦_{α,k} tends to (2π^α/Γ(α)) G*_{α,α+k} as (ρ,σ') → (0,0)"),
    ("kernel:dominating-bound", "integrable majorant of the 𝒦 integrand for ρr/(2t) ≤ 1"),
    ("pde:grushin", "𝒦_{α,k} solves the fractal Baouendi–Grushin equation"),
    ("pde:caloric-polynomial", "4αt + r² is annihilated by the Baouendi–Grushin operator"),
    ("pde:neumann", "reflected condition r^{2α−1} ∂_r u → 0"),
    ("pde:neumann-control", "r^{2−2α} has trace 2 − 2α"),
    ("pde:ou", "Mehler formula solves the Ornstein–Uhlenbeck Cauchy problem"),
    ("pde:ou-heat-limit", "Mehler kernel tends to the Gauss kernel as ω → 0"),
    ("pde:riccati", "exponential transform between oscillator and drifted Bessel equations"),
    ("cauchy:initial-data", "the Cauchy solution recovers its datum as t → 0"),
    ("cauchy:mass", "𝒦_{α,1} has t-independent mass against ρ^{2α−1} dρ dσ'"),
    ("cauchy:semigroup", "Chapman–Kolmogorov property of 𝒦_{α,1}"),
    ("pflow:radial-equation", "g_p solves the radial normalized p-Laplacian flow"),
    ("pflow:euclid-energy", "time integral of g_p is c_{n,p} |x|^{−(n−p)/(p−1)}"),
    ("pflow:heisenberg-paths", "G_p by direct cosine quadrature and via G*_{α,β}"),
    ("pflow:heisenberg-energy", "time integral of G_p is C_{n,p} N^{−(Q−p)/(p−1)}"),
];

/// Description of an anchor, if registered.
pub fn anchor_description(name: &str) -> Option<&'static str> {
    ANCHORS.iter().find(|(n, _)| *n == name).map(|(_, d)| *d)
}
