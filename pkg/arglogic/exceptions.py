# arglogic/exceptions.py
"""
Exceptions personnalisées pour la boîte à outils arglogic.

Ce module définit une hiérarchie d'exceptions typées pour identifier
précisément la nature des erreurs rencontrées lors de l'exécution.
"""


class ArgLogicError(Exception):
    """Exception de base pour toutes les erreurs arglogic."""
    pass


class ConfigurationError(ArgLogicError):
    """Erreur liée à la configuration de l'application."""
    pass


# Exceptions de parsing
class ParsingError(ArgLogicError):
    """Exception de base pour les erreurs de parsing des frameworks."""
    pass


class FrameworkSyntaxError(ParsingError):
    """Erreur de syntaxe dans un fichier APX ou TGF."""

    def __init__(self, line: int, col: int, message: str):
        """
        Initialise l'exception avec la position de l'erreur.

        Args:
            line: Numéro de ligne (à partir de 1)
            col: Numéro de colonne (à partir de 1)
            message: Message d'erreur détaillé
        """
        self.line = line
        self.col = col
        self.message = message
        super().__init__(f"Erreur de syntaxe ligne {line}, colonne {col}: {message}")


class UndeclaredArgumentError(ParsingError):
    """Une attaque référence un argument jamais déclaré."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Argument non déclaré: {name}")


# Exceptions de validation
class ValidationError(ArgLogicError):
    """Exception de base pour les erreurs de validation."""
    pass


class InvalidNegationError(ValidationError):
    """La négation fournie ne respecte pas N(0)=1, N(1)=0 et la décroissance."""
    pass


class InvalidTNormError(ValidationError):
    """La fonction fournie ne satisfait pas les axiomes d'une t-norme."""

    def __init__(self, name: str, axiom: str, witness: tuple):
        """
        Initialise l'exception avec l'axiome violé et un témoin.

        Args:
            name: Nom de la t-norme
            axiom: Axiome violé (unit, commutativity, ...)
            witness: Valeurs qui violent l'axiome
        """
        self.name = name
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"T-norme '{name}' invalide: axiome {axiom} violé en {witness}")


class NonLeftContinuousError(ValidationError):
    """Le résidu d'une t-norme utilisateur n'est pas atteint (t-norme non continue à gauche)."""

    def __init__(self, name: str, x, y):
        self.name = name
        self.x = x
        self.y = y
        super().__init__(
            f"T-norme '{name}' non continue à gauche: sup{{z | T({x}, z) <= {y}}} non atteint"
        )


class UnsupportedConfigurationError(ValidationError):
    """Combinaison de paramètres rejetée car hors des hypothèses d'un théorème."""
    pass


class ResourceLimitError(ArgLogicError):
    """L'espace de recherche dépasse la limite configurée."""

    def __init__(self, size: int, cap: int, what: str = "espace de recherche"):
        """
        Initialise l'exception avec la taille demandée et la limite.

        Args:
            size: Taille demandée
            cap: Limite configurée
            what: Description de la ressource limitée
        """
        self.size = size
        self.cap = cap
        self.what = what
        super().__init__(f"Limite dépassée pour {what}: {size} > {cap}")


# Exceptions d'évaluation
class EvaluationError(ArgLogicError):
    """Exception de base pour les erreurs d'évaluation."""
    pass


class DomainViolationError(EvaluationError):
    """Une valeur de l'assignation est hors du domaine du système logique."""

    def __init__(self, name: str, value, system: str):
        self.name = name
        self.value = value
        self.system = system
        super().__init__(f"Valeur {value} de '{name}' hors du domaine de {system}")


class PartialityError(EvaluationError):
    """La ternarisation n'est pas définie: un argument et un de ses attaquants valent 1."""

    def __init__(self, argument: str, attacker: str):
        self.argument = argument
        self.attacker = attacker
        super().__init__(
            f"Ternarisation indéfinie: '{argument}' et son attaquant '{attacker}' valent 1"
        )


class GeometricalSingularityError(EvaluationError):
    """Le dénominateur du système géométrique s'annule."""

    def __init__(self, argument: str = None):
        self.argument = argument
        where = f" pour '{argument}'" if argument else ""
        super().__init__(f"Système géométrique indéfini{where}: dénominateur nul")
