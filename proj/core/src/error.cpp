#include "fracterm/error.hpp"

namespace fracterm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax: return "SyntaxError";
    case ErrorKind::not_a_fracterm: return "NotAFracterm";
    case ErrorKind::not_simple: return "NotSimple";
    case ErrorKind::undefined: return "Undefined";
    case ErrorKind::open_term: return "OpenTerm";
    case ErrorKind::unsupported_operator: return "UnsupportedOperator";
    case ErrorKind::negative_into_nat: return "NegativeIntoNat";
    case ErrorKind::unsupported_shape: return "UnsupportedShape";
    case ErrorKind::capacity: return "CapacityError";
    case ErrorKind::shape_mismatch: return "ShapeMismatch";
    case ErrorKind::label_mismatch: return "LabelMismatch";
    case ErrorKind::unsupported_operation: return "UnsupportedOperation";
    case ErrorKind::invalid_instance: return "InvalidInstance";
    case ErrorKind::division_by_zero: return "DivisionByZero";
    case ErrorKind::unsupported_peripheral: return "UnsupportedPeripheral";
    case ErrorKind::strategy_inapplicable: return "StrategyInapplicable";
    case ErrorKind::dangling_reference: return "DanglingReference";
    case ErrorKind::level_conflict: return "LevelConflict";
  }
  return "Error";
}

}  // namespace fracterm
