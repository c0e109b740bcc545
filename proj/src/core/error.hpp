#pragma once

#include <stdexcept>
#include <string>

namespace haorcast {

// Stable error taxonomy. Every code maps 1:1 onto the C API status values,
// so new codes must be appended, never reordered.
enum class Errc : int {
    ok = 0,
    empty_input,
    degenerate_input,
    shape_mismatch,
    invalid_month,
    out_of_range,
    post_sentinel_date,
    empty_training_split,
    single_class,
    too_few_samples,
    untrained_model,
    negative_discharge,
    wrong_length,
    length_mismatch,
    empty_matrix,
    insufficient_data,
    missing_placeholder,
    transport_unregistered,
    unknown_stage,
    negative_days,
    negative_input,
    invalid_ablation,
    invalid_config,
    parse_error,
    io_error,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ok: return "ok";
        case Errc::empty_input: return "EmptyInput";
        case Errc::degenerate_input: return "DegenerateInput";
        case Errc::shape_mismatch: return "ShapeMismatch";
        case Errc::invalid_month: return "InvalidMonth";
        case Errc::out_of_range: return "OutOfRange";
        case Errc::post_sentinel_date: return "PostSentinelDate";
        case Errc::empty_training_split: return "EmptyTrainingSplit";
        case Errc::single_class: return "SingleClass";
        case Errc::too_few_samples: return "TooFewSamples";
        case Errc::untrained_model: return "UntrainedModel";
        case Errc::negative_discharge: return "NegativeDischarge";
        case Errc::wrong_length: return "WrongLength";
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::empty_matrix: return "EmptyMatrix";
        case Errc::insufficient_data: return "InsufficientData";
        case Errc::missing_placeholder: return "MissingPlaceholder";
        case Errc::transport_unregistered: return "TransportUnregistered";
        case Errc::unknown_stage: return "UnknownStage";
        case Errc::negative_days: return "NegativeDays";
        case Errc::negative_input: return "NegativeInput";
        case Errc::invalid_ablation: return "InvalidAblation";
        case Errc::invalid_config: return "InvalidConfig";
        case Errc::parse_error: return "ParseError";
        case Errc::io_error: return "IoError";
        case Errc::internal: return "Internal";
    }
    return "Unknown";
}

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace haorcast
