export {
  BenchTable,
  Row,
  CORE_COLUMNS,
  UnreadableFileError,
  parseTable,
  readTable,
  numericCell,
} from "./csv";
export {
  FIGURES,
  FigureKind,
  BarDatum,
  PhaseGroup,
  FigureData,
  MissingColumnError,
  EmptySelectionError,
  buildFigure,
} from "./figures";
export { renderSvg } from "./svg";
export { runCli } from "./cli";
