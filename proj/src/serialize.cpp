#include "digitseed/serialize.hpp"

#include <json.hpp>

#include <sstream>

namespace digitseed {
namespace {

using nlohmann::json;

json conditions_to_json(const CongruenceSystem& system) {
    json arr = json::array();
    for (const auto& cond : system.conditions)
        arr.push_back({{"modulus", cond.modulus.get_str()}, {"residue", cond.residue.get_str()}});
    return arr;
}

CongruenceSystem conditions_from_json(const json& arr) {
    CongruenceSystem system;
    for (const auto& item : arr)
        system.conditions.push_back(
            {BigInt(item.at("modulus").get<std::string>()), BigInt(item.at("residue").get<std::string>())});
    return system;
}

json primes_to_json(const PrimeCover& cover) {
    json arr = json::array();
    for (const auto& p : cover.primes) arr.push_back(p.get_str());
    return arr;
}

}  // namespace

std::string to_json(const CoverDocument& doc) {
    json j;
    j["base"] = doc.base.value;
    j["digit"] = doc.digit.value;
    if (doc.seed) j["seed"] = doc.seed->get_str();
    if (doc.cover) {
        j["length"] = doc.cover->primes.size();
        j["primes"] = primes_to_json(*doc.cover);
    }
    j["conditions"] = conditions_to_json(doc.conditions);
    return j.dump(2);
}

CoverDocument cover_document_from_json(const std::string& text) {
    json j = json::parse(text);
    CoverDocument doc;
    doc.base = Base{j.at("base").get<unsigned long>()};
    doc.digit = Digit{j.at("digit").get<unsigned long>()};
    if (j.contains("seed")) doc.seed = BigInt(j["seed"].get<std::string>());
    if (j.contains("primes")) {
        PrimeCover cover;
        for (const auto& p : j["primes"]) cover.primes.emplace_back(p.get<std::string>());
        if (j.contains("length") && j["length"].get<std::size_t>() != cover.primes.size())
            throw std::invalid_argument("cover document length disagrees with primes[]");
        doc.cover = std::move(cover);
    }
    if (j.contains("conditions")) doc.conditions = conditions_from_json(j["conditions"]);
    return doc;
}

std::string to_json(const CoverCertificate& cert) {
    json j;
    j["base"] = cert.spec.base.value;
    j["digit"] = cert.spec.digit.value;
    j["seed"] = cert.spec.seed.get_str();
    j["length"] = cert.cover.primes.size();
    j["primes"] = primes_to_json(cert.cover);
    json witnesses = json::array();
    for (const auto& w : cert.witnesses)
        witnesses.push_back({{"n", w.n}, {"prime", w.prime.get_str()}, {"quotient", w.quotient.get_str()}});
    j["witnesses"] = witnesses;
    return j.dump(2);
}

std::string to_json(const ProgressionFamily& family) {
    json j;
    j["residue"] = family.residue.get_str();
    j["modulus"] = family.modulus.get_str();
    return j.dump(2);
}

ProgressionFamily family_from_json(const std::string& text) {
    json j = json::parse(text);
    return {BigInt(j.at("residue").get<std::string>()), BigInt(j.at("modulus").get<std::string>())};
}

std::string render_elimination_report(const EliminationReport& report) {
    std::ostringstream out;
    out << "# elimination digit=" << report.digit.value << " base=" << report.base.value
        << " below=" << report.k_limit.get_str() << " n_max=" << report.n_max
        << " rounds=" << report.rounds << "\n";
    std::size_t eliminated = 0, covered = 0;
    std::vector<std::string> survivors;
    for (const auto& rec : report.records) {
        out << "k=" << rec.k.get_str();
        switch (rec.status) {
            case CandidateStatus::Eliminated:
                ++eliminated;
                out << " eliminated n=" << rec.n << (rec.proven ? " proven" : " prp rounds=");
                if (!rec.proven) out << rec.rounds;
                break;
            case CandidateStatus::Covered: {
                ++covered;
                out << " covered primes=";
                for (std::size_t i = 0; i < rec.cover->primes.size(); ++i)
                    out << (i ? "," : "") << rec.cover->primes[i].get_str();
                break;
            }
            case CandidateStatus::Survivor:
                survivors.push_back(rec.k.get_str());
                out << " survivor n_max=" << rec.n;
                break;
        }
        out << "\n";
    }
    out << "# summary candidates=" << report.records.size() << " eliminated=" << eliminated
        << " covered=" << covered << " survivors=";
    for (std::size_t i = 0; i < survivors.size(); ++i) out << (i ? "," : "") << survivors[i];
    if (survivors.empty()) out << "none";
    out << "\n";
    return out.str();
}

std::string render_scan_report(const SequenceSpec& spec, const ScanReport& report) {
    std::ostringstream out;
    out << "# scan k=" << spec.seed.get_str() << " digit=" << spec.digit.value
        << " base=" << spec.base.value << " n_max=" << report.n_max << " rounds=" << report.rounds
        << "\n";
    for (const auto& rec : report.witnesses) {
        out << "n=" << rec.n
            << (rec.witness.kind == CompositenessWitness::Kind::SmallFactor ? " factor=" : " strong_base=")
            << rec.witness.value.get_str() << "\n";
    }
    out << "# all " << report.n_max << " terms composite\n";
    return out.str();
}

std::string render_all_digit_report(const AllDigitReport& report) {
    std::ostringstream out;
    out << "# all-digit check k=" << report.k.get_str() << " n_max=" << report.n_max << "\n";
    for (const auto& o : report.outcomes) {
        out << "d=" << o.digit.value << " ";
        switch (o.kind) {
            case DigitOutcome::Kind::TrivialFactor:
                out << "factor=" << o.factor.get_str();
                break;
            case DigitOutcome::Kind::Covered: {
                out << "cover=";
                for (std::size_t i = 0; i < o.cover->cover.primes.size(); ++i)
                    out << (i ? "," : "") << o.cover->cover.primes[i].get_str();
                break;
            }
            case DigitOutcome::Kind::Scanned:
                out << "composite to n=" << o.n;
                break;
            case DigitOutcome::Kind::Failed:
                out << (o.proven ? "prime" : "probable prime") << " at n=" << o.n;
                break;
        }
        out << "\n";
    }
    out << "# " << (report.passed ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string render_pandigital_report(const PandigitalReport& report) {
    std::ostringstream out;
    out << "# pandigital check k=" << report.k.get_str() << "\n";
    for (const auto& [d, g] : report.digit_gcds) out << "gcd(k," << d << ")=" << g.get_str() << "\n";
    for (const auto& [d, cert] : report.certificates) {
        out << "d=" << d << " length=" << cert.cover.primes.size() << " cover=";
        for (std::size_t i = 0; i < cert.cover.primes.size(); ++i)
            out << (i ? "," : "") << cert.cover.primes[i].get_str();
        out << "\n";
    }
    for (unsigned long d : report.missing) out << "d=" << d << " no cover found\n";
    out << "# " << (report.complete() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace digitseed
