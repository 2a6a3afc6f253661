/**************************************************************************
 * error.hpp
 *
 * Copyright 2026 The lrc-towers Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrc {

enum class Errc {
    NonPrimeCharacteristic,
    FieldTooLarge,
    NotASquareField,
    UnsupportedDepth,
    VariantMismatch,
    IllegalOrder,
    NotASubgroup,
    NontrivialIntersection,
    RegimeViolation,
    EmptyCode,
    BudgetTooSmall,
    DuplicateWValues,
    NotACodeword,
    TooLarge,
    DenominatorZero,
    NotAPrimePower,
    UnsortedLocalities,
    InvalidArgument,
    MalformedDescriptor,
};

constexpr std::string_view errc_name(Errc e) {
    switch (e) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::NotASquareField: return "NotASquareField";
    case Errc::UnsupportedDepth: return "UnsupportedDepth";
    case Errc::VariantMismatch: return "VariantMismatch";
    case Errc::IllegalOrder: return "IllegalOrder";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::NontrivialIntersection: return "NontrivialIntersection";
    case Errc::RegimeViolation: return "RegimeViolation";
    case Errc::EmptyCode: return "EmptyCode";
    case Errc::BudgetTooSmall: return "BudgetTooSmall";
    case Errc::DuplicateWValues: return "DuplicateWValues";
    case Errc::NotACodeword: return "NotACodeword";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DenominatorZero: return "DenominatorZero";
    case Errc::NotAPrimePower: return "NotAPrimePower";
    case Errc::UnsortedLocalities: return "UnsortedLocalities";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::MalformedDescriptor: return "MalformedDescriptor";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the Errc kinds.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace lrc
