#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "einsnil/alpha_system.hpp"

namespace einsnil {

enum class Verdict { Yes, No };

/// Verifiable outcome of the Theorem-1 decision.
///  - YES: v > 0 with U v = [1]_N, witnessing p in the relative interior.
///  - NO:  a with Y^t a >= 0 componentwise, Y^t a != 0 and (a, p) <= 0.
///    (a, p) < 0 separates p from conv(F); (a, p) = 0 occurs when p sits on
///    the relative boundary, where a strict separator cannot exist but the
///    witness still rules out interiority.
struct Certificate {
  Verdict verdict;
  std::vector<Rational> v;  // YES: length N
  std::vector<Rational> a;  // NO: length n
  std::vector<BracketKey> order;  // the alpha order the vector refers to
};

/// Exact LP decision of Theorem 1: maximize t subject to U v = [1]_N,
/// v_j >= t, t <= 1; YES iff the optimum is positive. Certificates are
/// re-verified before being returned.
Certificate decide_einstein(const AlphaSystem& s);

/// Exact certificate check against the paper's defining conditions.
bool verify_certificate(const AlphaSystem& s, const Certificate& c);

/// t* of the decision LP (positive iff YES); exposed for diagnostics.
Rational decision_margin(const AlphaSystem& s);

std::string certificate_to_text(const Certificate& c);
Certificate certificate_from_text(const std::string& text);
Certificate certificate_from_file(const std::string& path);

std::string rational_to_string(const Rational& q);

}  // namespace einsnil
