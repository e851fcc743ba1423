#include "kleinian/errors.hpp"

namespace kleinian {

Error::Error(std::string name, const std::string& message)
    : std::runtime_error(message), name_(std::move(name)) {}

ConditionViolated::ConditionViolated(std::string row_label,
                                     std::string condition)
    : Error("ConditionViolated",
            "row " + row_label + ": condition '" + condition + "' violated"),
      row_label_(std::move(row_label)),
      condition_(std::move(condition)) {}

UnboundSymbol::UnboundSymbol(char symbol)
    : Error("UnboundSymbol",
            std::string("no matrix bound to generator '") + symbol + "'") {}

MissingSlot::MissingSlot(const std::string& row_label, const std::string& slot)
    : Error("MissingSlot", "row " + row_label + ": slot '" + slot + "' missing") {}

}  // namespace kleinian
