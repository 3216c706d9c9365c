#ifndef SYMPOW_CERTIFICATE_HPP
#define SYMPOW_CERTIFICATE_HPP

#include <string>
#include <vector>

#include "sympow/ideal.hpp"
#include "sympow/serialize.hpp"

namespace sympow {

/// Proof object for F not in I^r: a functional on degree-deg(F) forms that
/// vanishes on every r-fold generator product but not on F.
struct Certificate {
    json config;  ///< dataset description; "lines" (if present) determine the points
    FieldPtr field;
    std::vector<PointP2> points;
    unsigned symbolic_multiplicity = 3;
    unsigned power = 2;
    std::vector<HomForm> generators;
    unsigned complete_to = 0;
    std::vector<std::size_t> hilbert;
    Vector dual;
    HomForm form{rational_field(), 0};
    /// Check outcomes recorded when the certificate was produced.
    std::vector<std::pair<std::string, bool>> checks;

    unsigned degree() const { return form.degree(); }

    json to_json() const;
    static Certificate from_json(const json& j);
};

/// F turned out to be a member: the claimed counterexample is contradicted.
class MembershipContradiction : public AlgebraError {
public:
    MembershipContradiction(const std::string& what, Vector combination)
        : AlgebraError(what), combination_(std::move(combination))
    {
    }
    const Vector& combination() const { return combination_; }

private:
    Vector combination_;
};

/// Builds the spanning set of (I^r)_deg(F) from `pres` and decides membership.
/// Throws MembershipContradiction if F lies in I^r.
Certificate nonmember_certificate(const HomForm& form, const IdealPresentation& pres, const FatPointScheme& points,
                                  unsigned symbolic_multiplicity, unsigned power, json config);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationResult {
    std::vector<CheckResult> checks;
    bool ok() const;
    /// 1-based index of the first failing check, 0 if all pass.
    int first_failure() const;
};

inline constexpr const char* kCheckNames[5] = {"generators_vanish", "generator_completeness",
                                               "dual_annihilates_power", "dual_separates_form",
                                               "form_in_symbolic_power"};

/// Re-derives everything from the certificate contents alone.
VerificationResult verify_certificate(const Certificate& cert);

}  // namespace sympow

#endif  // SYMPOW_CERTIFICATE_HPP
