#include "longsim/cohort.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace longsim {

std::string to_string(Diagnosis d) { return d == Diagnosis::AD ? "AD" : "MCI"; }

Diagnosis diagnosis_from_string(const std::string& s) {
    if (s == "MCI") return Diagnosis::MCI;
    if (s == "AD") return Diagnosis::AD;
    throw std::invalid_argument("unknown diagnosis: " + s);
}

std::string make_instance_id(const std::string& patient_id, int end_visit_index) {
    return patient_id + "#" + std::to_string(end_visit_index);
}

std::optional<Series> Instance::series(const std::string& modality) const {
    Series out;
    out.reserve(visits.size());
    for (const Visit& v : visits) {
        auto it = v.features.find(modality);
        if (it == v.features.end()) return std::nullopt;
        out.push_back(it->second);
    }
    return out;
}

std::vector<Instance> expand_instances(const PatientRecord& patient, int horizon_months) {
    std::vector<Instance> out;
    const auto& vs = patient.visits;
    const int n = static_cast<int>(vs.size());
    for (int i = 1; i < n; ++i) {
        if (vs[i].month <= vs[i - 1].month)
            throw std::invalid_argument("patient " + patient.patient_id + ": visit times not strictly increasing");
    }
    if (n < 3) return out;

    for (int v = 3; v <= n; ++v) {
        Instance inst;
        inst.patient_id = patient.patient_id;
        inst.end_visit_index = v;
        inst.instance_id = make_instance_id(patient.patient_id, v);
        inst.visits.assign(vs.begin(), vs.begin() + v);

        const int t_end = vs[v - 1].month;
        bool progressed = false;
        bool stable = false;
        for (int k = 0; k < n; ++k) {
            const int t = vs[k].month;
            if (vs[k].diagnosis == Diagnosis::AD && t > t_end && t <= t_end + horizon_months)
                progressed = true;
            if (vs[k].diagnosis == Diagnosis::MCI && t >= t_end + horizon_months)
                stable = true;
        }
        if (progressed)
            inst.label = 1;
        else if (stable)
            inst.label = 0;
        out.push_back(std::move(inst));
    }
    return out;
}

std::optional<FeatureVector> snapshot_features(const Instance& instance, const std::string& modality) {
    const Visit& last = instance.last_visit();
    auto it = last.features.find(modality);
    if (it == last.features.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> Cohort::modalities() const {
    std::set<std::string> names;
    for (const auto& p : patients)
        for (const auto& v : p.visits)
            for (const auto& [m, f] : v.features) names.insert(m);
    return {names.begin(), names.end()};
}

int Cohort::modality_dim(const std::string& modality) const {
    for (const auto& p : patients)
        for (const auto& v : p.visits) {
            auto it = v.features.find(modality);
            if (it != v.features.end()) return static_cast<int>(it->second.size());
        }
    throw std::invalid_argument("modality not present in cohort: " + modality);
}

Cohort build_cohort(std::vector<PatientRecord> patients, int horizon_months) {
    std::sort(patients.begin(), patients.end(),
              [](const PatientRecord& a, const PatientRecord& b) { return a.patient_id < b.patient_id; });
    for (std::size_t i = 1; i < patients.size(); ++i)
        if (patients[i].patient_id == patients[i - 1].patient_id)
            throw std::invalid_argument("duplicate patient_id: " + patients[i].patient_id);

    std::map<std::string, std::size_t> dims;
    for (const auto& p : patients) {
        if (p.visits.empty())
            throw std::invalid_argument("patient " + p.patient_id + " has no visits");
        for (const auto& v : p.visits) {
            if (v.month < 0)
                throw std::invalid_argument("patient " + p.patient_id + ": negative visit month");
            for (const auto& [m, f] : v.features) {
                if (f.empty())
                    throw std::invalid_argument("patient " + p.patient_id + ": empty feature vector for " + m);
                auto [it, inserted] = dims.emplace(m, f.size());
                if (!inserted && it->second != f.size())
                    throw std::invalid_argument("modality " + m + " has inconsistent dimension across cohort");
            }
        }
    }

    Cohort cohort;
    cohort.horizon_months = horizon_months;
    for (auto& p : patients) {
        auto insts = expand_instances(p, horizon_months);
        cohort.instances.insert(cohort.instances.end(), insts.begin(), insts.end());
    }
    cohort.patients = std::move(patients);
    return cohort;
}

} // namespace longsim
