#pragma once

namespace magnus::conventions {

// The three binary convention choices the constructions leave open. They are
// unobservable individually; jointly they are pinned by the lifting property
// (augmentation of the pairing table reproduces the symplectic form), the
// sign of the difference formula, and the dual-route equality between the
// twist formula and Fox calculus. The values below are the combination that
// passes the full suite.

/// Global sign of the combinatorial intersection count (surface orientation).
inline constexpr int intersection_sign = -1;

/// Whether the sigma = + basepoint push is the short slide (true) or the
/// slide around the whole boundary circle (false).
inline constexpr bool sigma_plus_short_slide = false;

/// Exponent sign of the conjugating word in twist_endo.
inline constexpr int twist_conjugation_sign = 1;

} // namespace magnus::conventions
