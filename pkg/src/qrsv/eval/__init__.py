from qrsv.eval.evaluator import EvaluationFailure, Evaluator, evaluate, evaluate_text

__all__ = ["EvaluationFailure", "Evaluator", "evaluate", "evaluate_text"]
