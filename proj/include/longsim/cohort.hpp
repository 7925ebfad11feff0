#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace longsim {

using FeatureVector = std::vector<double>;

/// One multivariate time series: time-ordered points of equal dimension.
using Series = std::vector<FeatureVector>;

enum class Diagnosis { MCI, AD };

std::string to_string(Diagnosis d);
Diagnosis diagnosis_from_string(const std::string& s);

/// A single clinic visit. A modality absent from `features` is missing for
/// this visit (block-wise missingness).
struct Visit {
    int month = 0; // months since enrollment
    std::map<std::string, FeatureVector> features;
    Diagnosis diagnosis = Diagnosis::MCI;

    bool has_modality(const std::string& m) const { return features.count(m) != 0; }
};

struct PatientRecord {
    std::string patient_id;
    std::vector<Visit> visits; // strictly increasing month
};

/// A prediction instance: the first `end_visit_index` visits of a patient,
/// labeled by whether the patient progresses to AD within the horizon.
/// Label absent = censored (outcome undecidable from observed follow-up).
struct Instance {
    std::string instance_id; // "<patient_id>#<end_visit_index>"
    std::string patient_id;
    int end_visit_index = 0;      // 1-based, >= 3
    std::vector<Visit> visits;    // the prefix, length == end_visit_index
    std::optional<int> label;

    int length() const { return static_cast<int>(visits.size()); }
    const Visit& last_visit() const { return visits.back(); }

    /// Full-length series for `modality`, or nullopt if the modality is
    /// absent at any visit of the prefix (the alignment-level missing rule).
    std::optional<Series> series(const std::string& modality) const;
};

struct Cohort {
    std::vector<PatientRecord> patients; // sorted by patient_id
    std::vector<Instance> instances;     // sorted by (patient_id, end_visit_index)
    int horizon_months = 36;

    /// Sorted list of modality names seen anywhere in the cohort.
    std::vector<std::string> modalities() const;
    /// Dimension of a modality's feature vectors (uniform across the cohort).
    int modality_dim(const std::string& modality) const;
};

std::string make_instance_id(const std::string& patient_id, int end_visit_index);

/// Expands a patient into one instance per visit index v in {3..V_p}.
/// Label rules (horizon in months, boundary inclusive):
///   1 if some visit with time in (t_v, t_v + horizon] is AD;
///   0 if some visit with time >= t_v + horizon is still MCI;
///   censored otherwise.
/// Patients with fewer than 3 visits yield an empty sequence.
std::vector<Instance> expand_instances(const PatientRecord& patient, int horizon_months);

/// The most recent visit's feature vector for `modality`, or nullopt when the
/// modality is missing at the final visit (marker for downstream imputation).
std::optional<FeatureVector> snapshot_features(const Instance& instance, const std::string& modality);

/// Validates records (ordered visits, uniform modality dimensions), expands
/// every patient and assembles the cohort. Throws std::invalid_argument on
/// malformed input.
Cohort build_cohort(std::vector<PatientRecord> patients, int horizon_months);

} // namespace longsim
