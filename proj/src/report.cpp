#include "maxcert/report.hpp"

#include <sstream>

#include "json.hpp"

namespace maxcert {

namespace {

using nlohmann::ordered_json;

ordered_json rational_strings(const Vec& values) {
    ordered_json arr = ordered_json::array();
    for (const Rational& v : values) arr.push_back(v.str());
    return arr;
}

std::string finish(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string tuple_text(const std::vector<int>& xs) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
    os << ")";
    return os.str();
}

std::string vec_text(const Vec& values) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i].str();
    os << ")";
    return os.str();
}

} // namespace

std::string check_report(const std::vector<FnVerdict>& verdicts, bool human) {
    bool all = true;
    for (const FnVerdict& v : verdicts) all = all && v.violations.empty();

    if (human) {
        std::ostringstream os;
        for (const FnVerdict& v : verdicts) {
            if (v.violations.empty()) {
                os << v.name << ": convex\n";
            } else {
                const Violation& first = v.violations.front();
                os << v.name << ": not convex (" << v.violations.size()
                   << " violations; first at (x, y) = (" << first.x << ", " << first.y
                   << "), " << first.lhs.str() << " > " << first.rhs.str() << ")\n";
            }
        }
        os << (all ? "all functions convex\n" : "not all functions convex\n");
        return os.str();
    }

    ordered_json doc;
    doc["all_convex"] = all;
    doc["functions"] = ordered_json::array();
    for (const FnVerdict& v : verdicts) {
        ordered_json entry;
        entry["name"] = v.name;
        entry["convex"] = v.violations.empty();
        entry["violations"] = ordered_json::array();
        for (const Violation& viol : v.violations) {
            ordered_json jv;
            jv["x"] = viol.x;
            jv["y"] = viol.y;
            jv["lhs"] = viol.lhs.str();
            jv["rhs"] = viol.rhs.str();
            entry["violations"].push_back(jv);
        }
        doc["functions"].push_back(entry);
    }
    return finish(doc);
}

std::string certificate_report(const Certificate& cert, bool human) {
    if (human) {
        std::ostringstream os;
        if (cert.is_feasible()) {
            os << "status: feasible\n";
            os << "lambda: " << vec_text(cert.lambda().values()) << "\n";
            os << "margin: " << cert.margin().str() << "\n";
        } else {
            os << "status: infeasible\n";
            if (const auto* elems = std::get_if<std::vector<int>>(&cert.witness())) {
                os << "witness: inconsistent constraints at elements " << tuple_text(*elems) << "\n";
            } else {
                const auto& mm = std::get<MinimaxWitness>(cert.witness());
                os << "witness: element distribution t = " << vec_text(mm.t)
                   << " caps every margin at " << mm.value.str() << "\n";
            }
        }
        return os.str();
    }

    ordered_json doc;
    if (cert.is_feasible()) {
        doc["status"] = "feasible";
        doc["lambda"] = rational_strings(cert.lambda().values());
        doc["margin"] = cert.margin().str();
    } else {
        doc["status"] = "infeasible";
        ordered_json witness;
        if (const auto* elems = std::get_if<std::vector<int>>(&cert.witness())) {
            witness["kind"] = "elements";
            witness["elements"] = *elems;
        } else {
            const auto& mm = std::get<MinimaxWitness>(cert.witness());
            witness["kind"] = "minimax";
            witness["t"] = rational_strings(mm.t);
            witness["value"] = mm.value.str();
        }
        doc["witness"] = witness;
    }
    return finish(doc);
}

std::string diagnose_report(const NfResult& nf, const HellyResult& helly,
                            const std::vector<LambdaPolytope>& polytopes, bool human) {
    if (human) {
        std::ostringstream os;
        if (nf.ok) {
            os << "tuple condition: holds\n";
        } else {
            os << "tuple condition: fails at tuple " << tuple_text(nf.tuple) << " with t = "
               << vec_text(nf.t) << ", value " << nf.value.str() << "\n";
        }
        if (helly.ok) {
            os << "subset intersections: all nonempty\n";
        } else {
            os << "subset intersections: empty for elements " << tuple_text(helly.subset) << "\n";
        }
        for (size_t x = 0; x < polytopes.size(); ++x) {
            os << "element " << x << ": coefficients " << vec_text(polytopes[x].coeffs)
               << (polytopes[x].empty() ? " (empty)" : "") << "\n";
        }
        return os.str();
    }

    ordered_json doc;
    ordered_json jnf;
    jnf["ok"] = nf.ok;
    if (!nf.ok) {
        jnf["tuple"] = nf.tuple;
        jnf["t"] = rational_strings(nf.t);
        jnf["value"] = nf.value.str();
    }
    doc["nf"] = jnf;
    ordered_json jh;
    jh["ok"] = helly.ok;
    if (!helly.ok) jh["subset"] = helly.subset;
    doc["helly"] = jh;
    doc["polytopes"] = ordered_json::array();
    for (size_t x = 0; x < polytopes.size(); ++x) {
        ordered_json entry;
        entry["element"] = static_cast<int>(x);
        entry["coeffs"] = rational_strings(polytopes[x].coeffs);
        entry["empty"] = polytopes[x].empty();
        doc["polytopes"].push_back(entry);
    }
    return finish(doc);
}

std::string opcalc_report(const OpTerm& term, const RealizedOp* realized, bool human) {
    if (human) {
        std::ostringstream os;
        os << "term: " << term.str() << "\n";
        os << "coefficients: (" << term.coeff_a().str() << ", " << term.coeff_b().str() << ")\n";
        os << "ratio: " << term.ratio().str() << "\n";
        os << "depth: " << term.depth() << "\n";
        if (realized) {
            os << "table:\n";
            for (const auto& row : realized->table.rows()) {
                os << " ";
                for (int v : row) os << " " << v;
                os << "\n";
            }
        }
        return os.str();
    }

    ordered_json doc;
    doc["term"] = term.str();
    doc["a"] = term.coeff_a().str();
    doc["b"] = term.coeff_b().str();
    doc["ratio"] = term.ratio().str();
    doc["depth"] = term.depth();
    if (realized) doc["table"] = realized->table.rows();
    return finish(doc);
}

std::string kkt_forward_report(const KktResult& result, const std::vector<int>& minimizers,
                               bool human) {
    if (human) {
        std::ostringstream os;
        os << "multipliers: " << vec_text(result.lambda.values()) << "\n";
        os << "transversality products: " << vec_text(result.transversality_products) << "\n";
        os << "margin: " << result.el_margin.str() << "\n";
        os << "minimizers: " << tuple_text(minimizers) << "\n";
        return os.str();
    }

    ordered_json doc;
    doc["lambda"] = rational_strings(result.lambda.values());
    doc["transversality_products"] = rational_strings(result.transversality_products);
    doc["el_margin"] = result.el_margin.str();
    doc["minimizers"] = minimizers;
    return finish(doc);
}

std::string kkt_verify_report(bool verified, const Vec& products, const Rational& el_margin,
                              const std::vector<int>& minimizers, bool human) {
    if (human) {
        std::ostringstream os;
        os << "verified: " << (verified ? "yes" : "no") << "\n";
        os << "transversality products: " << vec_text(products) << "\n";
        os << "margin: " << el_margin.str() << "\n";
        os << "minimizers: " << tuple_text(minimizers) << "\n";
        return os.str();
    }

    ordered_json doc;
    doc["verified"] = verified;
    doc["transversality_products"] = rational_strings(products);
    doc["el_margin"] = el_margin.str();
    doc["minimizers"] = minimizers;
    return finish(doc);
}

std::string gen_report(const std::vector<std::string>& files, bool human) {
    if (human) {
        std::ostringstream os;
        for (const std::string& f : files) os << "wrote " << f << "\n";
        return os.str();
    }
    ordered_json doc;
    doc["written"] = static_cast<int>(files.size());
    doc["files"] = files;
    return finish(doc);
}

} // namespace maxcert
