#pragma once

#include <string>
#include <vector>

#include "maxcert/certificate.hpp"
#include "maxcert/convexity.hpp"
#include "maxcert/kkt.hpp"
#include "maxcert/opcalc.hpp"

namespace maxcert {

// Machine reports are single JSON documents: fixed key order, two-space
// indent, canonical rational strings, trailing newline. Identical inputs
// give identical bytes. Human reports are line-oriented text.

struct FnVerdict {
    std::string name;
    std::vector<Violation> violations;
};

std::string check_report(const std::vector<FnVerdict>& verdicts, bool human);

std::string certificate_report(const Certificate& cert, bool human);

std::string diagnose_report(const NfResult& nf, const HellyResult& helly,
                            const std::vector<LambdaPolytope>& polytopes, bool human);

// realized may be null when no instance was supplied.
std::string opcalc_report(const OpTerm& term, const RealizedOp* realized, bool human);

std::string kkt_forward_report(const KktResult& result, const std::vector<int>& minimizers,
                               bool human);

std::string kkt_verify_report(bool verified, const Vec& products, const Rational& el_margin,
                              const std::vector<int>& minimizers, bool human);

std::string gen_report(const std::vector<std::string>& files, bool human);

} // namespace maxcert
